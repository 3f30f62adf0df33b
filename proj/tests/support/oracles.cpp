#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

std::uint64_t partition_count(std::size_t n) {
  std::function<std::uint64_t(std::size_t, std::size_t)> p;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  p = [&](std::size_t m, std::size_t k) -> std::uint64_t {
    if (m == 0) return 1;
    if (k == 0) return 0;
    auto key = std::make_pair(m, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t v = p(m, k - 1) + (k <= m ? p(m - k, k) : 0);
    memo[key] = v;
    return v;
  };
  return p(n, n);
}

std::uint64_t plane_partition_count(std::size_t n) {
  std::vector<std::uint64_t> series(n + 1, 0);
  series[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t rep = 0; rep < k; ++rep)  // multiply by 1/(1 - q^k), k times
      for (std::size_t m = k; m <= n; ++m) series[m] += series[m - k];
  return series[n];
}

std::uint64_t grid_subset_staircase_count(std::size_t n, int side) {
  std::vector<std::vector<int>> cells;
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b)
      for (int c = 0; c < side; ++c) cells.push_back({a, b, c});
  const std::size_t total = cells.size();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  std::uint64_t count = 0;
  while (true) {
    std::set<std::vector<int>> chosen;
    for (auto i : pick) chosen.insert(cells[i]);
    bool closed = true;
    for (const auto& m : chosen)
      for (int k = 0; k < 3 && closed; ++k)
        if (m[k] > 0) {
          auto d = m;
          --d[k];
          if (!chosen.count(d)) closed = false;
        }
    count += closed;
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

std::vector<ExponentVector> scan_minimal_generators(const Staircase& beta) {
  const std::size_t r = beta.r();
  std::vector<ExponentVector> out;
  std::vector<int> cur(r, 0);
  while (true) {
    ExponentVector m(cur);
    if (!beta.contains(m)) {
      bool minimal = true;
      for (std::size_t i = 0; i < r; ++i)
        if (m[i] > 0 && !beta.contains(m.with(i, m[i] - 1))) minimal = false;
      if (minimal) out.push_back(m);
    }
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (++cur[i] <= beta.width(i)) break;
      cur[i] = 0;
    }
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t dense_tangent_dimension(const Staircase& beta) {
  using Q = boost::multiprecision::cpp_rational;
  const auto gens = scan_minimal_generators(beta);
  const auto& basis = beta.members();
  const std::size_t n = basis.size(), cols = gens.size() * n;
  auto pos = [&](const ExponentVector& m) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
  };

  std::vector<std::vector<Q>> rows;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      std::vector<std::vector<Q>> block(n, std::vector<Q>(cols, 0));
      auto L = hilbsmooth::lcm(gens[a], gens[b]);
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> ta(beta.r()), tb(beta.r());
        for (std::size_t q = 0; q < beta.r(); ++q) {
          ta[q] = L[q] - gens[a][q] + basis[k][q];
          tb[q] = L[q] - gens[b][q] + basis[k][q];
        }
        ExponentVector ma(ta), mb(tb);
        if (beta.contains(ma)) block[pos(ma)][a * n + k] += 1;
        if (beta.contains(mb)) block[pos(mb)][b * n + k] -= 1;
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i][c] != 0) {
        Q f = rows[i][c] / rows[rank][c];
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
      }
    ++rank;
  }
  return cols - rank;
}

std::set<ExponentVector> fixed_point_heads(const Staircase& beta, const Arrow& a) {
  const auto v = a.vector();
  auto legal = [&](const ExponentVector& h) {
    if (!beta.contains(h)) return false;
    std::vector<int> t(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
      t[k] = h[k] - v[k];
      if (t[k] < 0) return false;
    }
    return !beta.contains(ExponentVector(t));
  };
  std::set<ExponentVector> heads{a.head};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& h : std::set<ExponentVector>(heads))
      for (std::size_t k = 0; k < h.size(); ++k)
        for (int d : {-1, 1}) {
          if (h[k] + d < 0) continue;
          auto g = h.with(k, h[k] + d);
          if (legal(g) && heads.insert(g).second) grew = true;
        }
  }
  return heads;
}

Staircase random_staircase(std::mt19937& rng, std::size_t r, std::size_t n) {
  std::set<ExponentVector> members{ExponentVector(r)};
  while (members.size() < n) {
    std::vector<ExponentVector> addable;
    for (const auto& m : members)
      for (std::size_t i = 0; i < r; ++i) {
        auto c = m.with(i, m[i] + 1);
        if (members.count(c)) continue;
        bool ok = true;
        for (std::size_t k = 0; k < r; ++k)
          if (c[k] > 0 && !members.count(c.with(k, c[k] - 1))) ok = false;
        if (ok) addable.push_back(c);
      }
    std::sort(addable.begin(), addable.end());
    addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    members.insert(addable[pick(rng)]);
  }
  return Staircase::from_monomials({members.begin(), members.end()}, r);
}

Staircase four_points() { return Staircase::from_monomials({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3); }

Staircase compound_five() {
  return Staircase::from_monomials({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}, 3);
}

Staircase l_shape() { return Staircase::from_monomials({{0, 0}, {1, 0}, {0, 1}, {0, 2}}, 2); }

Staircase rigid_witness_fixture() {
  return Staircase::from_minimal_generators({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 0, 2}, {0, 1, 1}, {1, 1, 0}}, 3);
}

Staircase plane27() {
  const int extents[] = {6, 5, 5, 4, 4, 2, 1};
  std::vector<ExponentVector> members;
  for (int y = 0; y < 7; ++y)
    for (int x = 0; x < extents[y]; ++x) members.push_back({x, y});
  return Staircase::from_monomials(members, 2);
}

Staircase four_variable_union() {
  return hilbsmooth::two_box_union(hilbsmooth::BoxSpec({2, 2, 1, 1}), hilbsmooth::BoxSpec({1, 1, 2, 2}));
}

} // namespace oracle
