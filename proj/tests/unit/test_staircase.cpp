#include <algorithm>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "hilbsmooth/error.hpp"
#include "hilbsmooth/staircase.hpp"
#include "oracles.hpp"

using namespace hilbsmooth;

namespace {

std::vector<ExponentVector> sorted(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST(Staircase, FromMonomials) {
  auto f2 = Staircase::from_monomials({{0, 0}, {1, 0}, {0, 1}, {0, 2}}, 2);
  EXPECT_EQ(f2.size(), 4u);
  auto one = Staircase::from_monomials({{0, 0, 0}}, 3);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_THROW(Staircase::from_monomials({{1, 0}}, 2), NotDivisionClosed);
  EXPECT_THROW(Staircase::from_monomials({}, 2), EmptyInput);
  EXPECT_THROW(Staircase::from_monomials({{0, 0, 0}}, 2), DimensionError);
}

TEST(Staircase, NotDivisionClosedNamesWitness) {
  try {
    Staircase::from_monomials({{0, 0}, {1, 1}, {0, 1}}, 2);
    FAIL();
  } catch (const NotDivisionClosed& e) {
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos);
  }
}

TEST(Staircase, FromMinimalGenerators) {
  EXPECT_EQ(Staircase::from_minimal_generators({{2, 0}, {1, 1}, {0, 3}}, 2), oracle::l_shape());
  EXPECT_EQ(Staircase::from_minimal_generators({{1, 0}, {0, 1}}, 2).members(),
            std::vector<ExponentVector>{ExponentVector({0, 0})});
  EXPECT_THROW(Staircase::from_minimal_generators({{2, 0}}, 2), InfiniteColength);
  EXPECT_THROW(Staircase::from_minimal_generators({{2, 0}, {1, 0}, {0, 1}}, 2), NotAntichain);
}

TEST(Staircase, MinimalGeneratorsExamples) {
  EXPECT_EQ(oracle::four_points().minimal_generators(),
            sorted({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(oracle::compound_five().minimal_generators(),
            sorted({{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));
  auto b = box(BoxSpec({2, 3, 1}));
  EXPECT_EQ(b.minimal_generators(), sorted({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
}

TEST(Staircase, MaximalMonomials) {
  EXPECT_EQ(oracle::four_points().maximal_monomials(), sorted({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(Staircase::from_monomials({{0, 0}}, 2).maximal_monomials(),
            std::vector<ExponentVector>{ExponentVector({0, 0})});
  EXPECT_EQ(oracle::l_shape().maximal_monomials(), sorted({{1, 0}, {0, 2}}));
}

TEST(Staircase, Widths) {
  EXPECT_EQ(oracle::l_shape().widths(), (std::vector<Exponent>{2, 3}));
  EXPECT_EQ(box(BoxSpec({2, 2, 1, 1})).widths(), (std::vector<Exponent>{2, 2, 1, 1}));
  EXPECT_EQ(oracle::four_points().widths(), (std::vector<Exponent>{2, 2, 2}));
  EXPECT_EQ(oracle::l_shape().corner(1), ExponentVector({0, 3}));
}

TEST(Staircase, Boxes) {
  EXPECT_EQ(box(BoxSpec({2, 2})).members(), sorted({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(box(BoxSpec({3})).members(), sorted({{0}, {1}, {2}}));
  EXPECT_EQ(box(BoxSpec({2, 2, 1, 1})).size(), 4u);
  EXPECT_TRUE(box(BoxSpec({2, 2, 1, 1})).is_box());
  EXPECT_FALSE(oracle::l_shape().is_box());
  EXPECT_THROW(BoxSpec({2, 0}), DimensionError);
  EXPECT_EQ(BoxSpec::parse("2,3,1").widths(), (std::vector<Exponent>{2, 3, 1}));
  EXPECT_THROW(BoxSpec::parse("2,,1"), DimensionError);
  EXPECT_THROW(BoxSpec::parse("2,x"), DimensionError);
}

TEST(Staircase, Thicken) {
  EXPECT_EQ(thicken(Staircase::from_monomials({{0}}, 1), 3).members(), sorted({{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(thicken(box(BoxSpec({2, 2})), 2), box(BoxSpec({2, 2, 2})));
  auto t = thicken(oracle::l_shape(), 1);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.r(), 3u);
  EXPECT_THROW(thicken(oracle::l_shape(), 0), DimensionError);
}

TEST(Staircase, Truncate) {
  EXPECT_EQ(truncate(oracle::l_shape(), 1, 2).members(), std::vector<ExponentVector>{ExponentVector({0, 0})});
  EXPECT_EQ(truncate(box(BoxSpec({2, 3})), 1, 1), box(BoxSpec({2, 2})));
  EXPECT_THROW(truncate(oracle::l_shape(), 1, 3), NothingAtHeight);
}

TEST(Staircase, Plane27Truncation) {
  auto beta = oracle::plane27();
  EXPECT_EQ(beta.size(), 27u);
  auto t = truncate(beta, 0, 3);
  EXPECT_EQ(t.members(), sorted({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}));
}

TEST(Staircase, AddBox) {
  auto single = Staircase::from_monomials({{0, 0, 0}}, 3);
  EXPECT_EQ(add_box(single, 2, 1, {2, 2, 1}), oracle::compound_five());
  EXPECT_EQ(add_box(box(BoxSpec({2, 2})), 0, 1, {1, 2}), box(BoxSpec({3, 2})));
  EXPECT_THROW(add_box(box(BoxSpec({2, 2})), 0, 1, {1, 1}), WidthTooSmall);
  EXPECT_THROW(add_box(box(BoxSpec({2, 2})), 0, 1, {2, 2}), DimensionError);
}

TEST(Staircase, TwoBoxUnion) {
  auto u = oracle::four_variable_union();
  EXPECT_EQ(u.members(), sorted({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
                                 {0, 0, 0, 1}, {0, 0, 1, 1}}));
  EXPECT_EQ(two_box_union(BoxSpec({2, 3}), BoxSpec({2, 3})), box(BoxSpec({2, 3})));
  EXPECT_EQ(two_box_union(BoxSpec({2, 1}), BoxSpec({1, 3})), oracle::l_shape());
  EXPECT_THROW(two_box_union(BoxSpec({2, 1}), BoxSpec({1, 3, 1})), DimensionError);
}

TEST(Staircase, Hypothesis81) {
  // The fixture has the generator x2 x3 below x1-height 1 but x3-width 3 after truncation.
  EXPECT_FALSE(hypothesis81(oracle::rigid_witness_fixture(), 0, 1));
  auto b = box(BoxSpec({3, 2, 2}));
  for (std::size_t j = 0; j < 3; ++j)
    for (Exponent h = 1; h < b.width(j); ++h) EXPECT_TRUE(hypothesis81(b, j, h));
  EXPECT_THROW(hypothesis81(b, 1, 2), NothingAtHeight);
}

TEST(StaircaseProperty, AddBoxSatisfiesHypothesisAndRoundTrips) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 2 + trial % 2;
    auto beta = oracle::random_staircase(rng, r, 1 + trial % 7);
    std::size_t j = static_cast<std::size_t>(trial) % r;
    Exponent h = 1 + trial % 3;
    auto widths = beta.widths();
    widths[j] = h;
    widths[(j + 1) % r] += trial % 2;
    auto added = add_box(beta, j, h, widths);
    EXPECT_EQ(truncate(added, j, h), beta);
    EXPECT_TRUE(hypothesis81(added, j, h));
  }
}

TEST(StaircaseFile, RoundTrip) {
  auto beta = oracle::four_points();
  EXPECT_EQ(beta.to_file_text(), "staircase v1\nr=3 n=4\n0 0 0\n0 0 1\n0 1 0\n1 0 0\n");
  EXPECT_EQ(parse_staircase(beta.to_file_text()), beta);
  auto path = std::filesystem::temp_directory_path() / "hilbsmooth_roundtrip.stc";
  write_staircase_file(beta, path.string());
  EXPECT_EQ(read_staircase_file(path.string()), beta);
  std::filesystem::remove(path);
}

TEST(StaircaseFile, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_staircase(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("stair v1\nr=1 n=1\n0\n"), 1u);
  EXPECT_EQ(line_of("staircase v1\nr=1\n0\n"), 2u);
  EXPECT_EQ(line_of("staircase v1\nr=2 n=3\n0 0\n1 0\n0 1\n"), 5u);  // unsorted
  EXPECT_EQ(line_of("staircase v1\nr=2 n=3\n0 0\n0 1\n0 1\n"), 5u);  // duplicate
  EXPECT_EQ(line_of("staircase v1\nr=2 n=2\n0 0\n1 1\n"), 4u);       // not closed
  EXPECT_EQ(line_of("staircase v1\nr=2 n=2\n0 0\n0 1 0\n"), 4u);     // wrong arity
  EXPECT_EQ(line_of("staircase v1\nr=2 n=2\n0 0\n0 a\n"), 4u);       // malformed
  EXPECT_NE(line_of("staircase v1\nr=2 n=3\n0 0\n0 1\n"), 0u);       // too few lines
  EXPECT_EQ(line_of("staircase v1\nr=2 n=2\n0 0\n0 1\n"), 0u);
  EXPECT_THROW(read_staircase_file("/nonexistent/file.stc"), Error);
}

TEST(StaircaseEnumeration, SmallCounts) {
  EXPECT_EQ(enumerate_staircases(1, 5).size(), 1u);
  EXPECT_EQ(enumerate_staircases(2, 4).size(), 5u);
  EXPECT_EQ(enumerate_staircases(3, 4).size(), 13u);
}

TEST(StaircaseEnumeration, TwoVariablesMatchPartitionNumbers) {
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_staircases(2, n).size(), oracle::partition_count(n)) << n;
}

TEST(StaircaseEnumeration, ThreeVariablesMatchPlanePartitions) {
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_EQ(enumerate_staircases(3, n).size(), oracle::plane_partition_count(n)) << n;
}

TEST(StaircaseEnumeration, ThreeVariablesMatchGridSubsets) {
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_EQ(enumerate_staircases(3, n).size(), oracle::grid_subset_staircase_count(n, 4)) << n;
}

TEST(StaircaseEnumeration, DistinctValidAndDeterministic) {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t n = 1; n <= 5; ++n) {
      auto all = enumerate_staircases(r, n);
      std::set<std::vector<ExponentVector>> seen;
      for (const auto& s : all) {
        EXPECT_EQ(s.size(), n);
        EXPECT_TRUE(seen.insert(s.members()).second);
      }
      EXPECT_EQ(all, enumerate_staircases(r, n));
    }
}

TEST(StaircaseEnumeration, EarlyStop) {
  std::size_t visited = 0;
  for_each_staircase(3, 6, [&](const Staircase&) { return ++visited < 5; });
  EXPECT_EQ(visited, 5u);
}

TEST(StaircaseProperty, DerivedDataMatchesScans) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& beta : enumerate_staircases(r, n)) {
        EXPECT_EQ(beta.minimal_generators(), oracle::scan_minimal_generators(beta));
        EXPECT_EQ(Staircase::from_minimal_generators(beta.minimal_generators(), r), beta);
        for (const auto& m : beta.members()) {
          bool maximal = true;
          for (std::size_t i = 0; i < r; ++i)
            if (beta.contains(m.with(i, m[i] + 1))) maximal = false;
          EXPECT_EQ(beta.is_maximal(m), maximal);
        }
      }
}

TEST(StaircaseProperty, ConstructorCardinalities) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = oracle::random_staircase(rng, 1 + trial % 3, 1 + trial % 6);
    Exponent w = 1 + trial % 3;
    EXPECT_EQ(thicken(base, w).size(), base.size() * static_cast<std::size_t>(w));
    std::vector<Exponent> widths{1 + trial % 3, 1 + (trial / 3) % 3, 1 + (trial / 9) % 2};
    EXPECT_EQ(box(BoxSpec(widths)).size(), static_cast<std::size_t>(widths[0] * widths[1] * widths[2]));
  }
}

TEST(StaircaseProperty, TruncationGenerators) {
  for (std::size_t r = 2; r <= 3; ++r)
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& beta : enumerate_staircases(r, n))
        for (std::size_t j = 0; j < r; ++j)
          for (Exponent h = 1; h < beta.width(j); ++h) {
            auto t = truncate(beta, j, h);
            std::set<ExponentVector> lifted, divisible;
            for (const auto& m : beta.minimal_generators()) {
              if (m[j] >= h) EXPECT_TRUE(t.is_minimal_generator(m.with(j, m[j] - h)));
              if (m[j] > h) lifted.insert(m.with(j, m[j] - h));
            }
            for (const auto& g : t.minimal_generators())
              if (g[j] > 0) divisible.insert(g);
            EXPECT_EQ(lifted, divisible);
            EXPECT_EQ(beta.width(j), t.width(j) + h);
          }
}

TEST(StaircaseProperty, TwoBoxUnionGenerators) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> w(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 2 + trial % 3;
    std::vector<Exponent> a(r), b(r);
    for (std::size_t i = 0; i < r; ++i) {
      a[i] = w(rng);
      b[i] = w(rng);
    }
    auto u = two_box_union(BoxSpec(a), BoxSpec(b));
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(u.width(i), std::max(a[i], b[i]));
    for (const auto& g : u.minimal_generators()) {
      if (g.support_size() == 1) continue;
      bool found = false;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          if (a[j] > b[j] && b[k] > a[k] && g == ExponentVector::unit(r, j, b[j]).with(k, a[k])) found = true;
      EXPECT_TRUE(found) << to_tuple_string(g);
    }
  }
}
