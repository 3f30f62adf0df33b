#include "hilbsmooth/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "hilbsmooth/bunch.hpp"
#include "hilbsmooth/classify.hpp"
#include "hilbsmooth/cotangent.hpp"
#include "hilbsmooth/error.hpp"
#include "hilbsmooth/oracle.hpp"
#include "hilbsmooth/report.hpp"

namespace hilbsmooth {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::Oracle, "oracle"},     {Suite::TwoVar, "2var"},     {Suite::ThreeVar, "3var"},
    {Suite::Boxes, "boxes"},       {Suite::Thicken, "thicken"}, {Suite::Truncate, "truncate"},
    {Suite::AddBox, "addbox"},     {Suite::Union, "union"},
};

// Thrown inside checks; carries the name of the failed property.
struct CheckFailure {
  std::string check;
  std::string message;
};

class Checker {
public:
  explicit Checker(std::size_t& counter) : counter_(counter) {}

  void require(bool ok, std::string_view check, const std::string& message) {
    ++counter_;
    if (!ok) throw CheckFailure{std::string(check), message};
  }

private:
  std::size_t& counter_;
};

struct Outcome {
  bool smooth = false;
  bool compound = false;
  bool witness = false;
  bool oracle_agrees = false;
  std::size_t checks = 0;
  std::optional<Violation> violation;
};

bool smooth_of(const Staircase& beta) { return class_report(beta).smooth; }

void check_invariants(const Staircase& beta, TranslationEngine& engine, const CotangentReport& cot,
                      const StructureReport& st, Checker& c) {
  c.require(Staircase::from_minimal_generators(beta.minimal_generators(), beta.r()) == beta,
            "generator round trip", "staircase differs from the complement of its generators");
  c.require(cot.dim >= cot.rn, "dimension lower bound",
            "dim " + std::to_string(cot.dim) + " < rn " + std::to_string(cot.rn));
  c.require(st.rigid_nonstandard_witnesses.empty() || !cot.smooth, "witness soundness",
            "smooth staircase has a rigid non-standard arrow");
  if (cot.smooth)
    c.require(cot.nonstandard_count == cot.nonstandard_zero_count, "smooth implies non-standard arrows vanish",
              "a non-standard minimal arrow has a nonzero class");

  // Rigid arrows cannot move.
  for (const auto& b : beta.minimal_generators())
    for (const auto& j : beta.maximal_monomials()) {
      const auto& cls = engine.class_of(Arrow{b, j});
      c.require(cls.heads.size() == 1, "rigid arrow", Arrow{b, j}.to_string() + " can be translated");
    }

  // Every arrow one step above a generator reduces to zero or to a minimal arrow.
  for (const auto& g : beta.minimal_generators())
    for (std::size_t k = 0; k < beta.r(); ++k) {
      const auto d = g.with(k, g[k] + 1);
      for (const auto& j : beta.members()) {
        const Arrow a{d, j};
        const auto& cls = engine.class_of(a);
        bool ok = cls.zero;
        for (std::size_t h = 0; !ok && h < cls.heads.size(); ++h) {
          std::vector<Exponent> t(beta.r());
          for (std::size_t q = 0; q < beta.r(); ++q) t[q] = cls.heads[h][q] - cls.vector[q];
          ok = beta.is_minimal_generator(ExponentVector(std::move(t)));
        }
        c.require(ok, "minimal reduction", a.to_string() + " reaches neither zero nor a minimal arrow");
      }
    }

  // Advancement passes down a shadow.
  for (const auto& a : minimal_arrows(beta)) {
    auto var = standard_variable(a);
    if (!var || !engine.can_advance(a, *var)) continue;
    for (const auto& s : shadow(a, *var))
      c.require(engine.can_advance(s, *var), "shadow advancement",
                a.to_string() + " advances but its shadow member " + s.to_string() + " does not");
  }

  // Standard bunch.
  const auto bunch = build_bunch(engine);
  const auto bad = verify_bunch(beta, bunch);
  c.require(bad.empty(), "standard bunch", bad.empty() ? "" : bad.front());
  c.require(bunch.size() == cot.rn, "standard bunch size", std::to_string(bunch.size()) + " arrows");
  if (cot.smooth) {
    std::set<std::pair<LatticeVector, ExponentVector>> bunch_keys, class_keys;
    for (const auto& a : bunch.all()) bunch_keys.insert(engine.class_of(a).key());
    for (const auto& cls : cot.classes) class_keys.insert(cls.key());
    c.require(bunch_keys == class_keys, "bunch spans", "bunch classes differ from the nonzero classes");
  }

  if (st.decomposition)
    c.require(replay(*st.decomposition) == beta, "decomposition replay", "replay does not reproduce the staircase");
}

void check_two_var(const Staircase& beta, const CotangentReport& cot, const StructureReport& st, Checker& c) {
  if (beta.r() != 2) return;
  c.require(cot.smooth && cot.dim == 2 * beta.size(), "two variables smooth",
            "dim " + std::to_string(cot.dim) + " for n=" + std::to_string(beta.size()));
  c.require(st.is_compound_box, "two variables compound", "not recognized as a compound box");
}

void check_three_var(const Staircase& beta, const CotangentReport& cot, const StructureReport& st,
                     TranslationEngine& engine, Checker& c) {
  if (beta.r() != 3) return;
  c.require(cot.smooth == st.is_compound_box, "three variables compound iff smooth",
            std::string("smooth=") + (cot.smooth ? "true" : "false"));
  c.require(cot.smooth == st.nonstandard_minimal_arrows_vanish, "three variables vanishing iff smooth",
            std::string("smooth=") + (cot.smooth ? "true" : "false"));
  const auto& g = *st.g_pairs;
  bool all_large = std::all_of(g.begin(), g.end(), [](const auto& kv) { return kv.second.size() > 2; });
  for (const auto& [pair, set] : g) c.require(set.size() >= 2, "generator pair sets", "fewer than two corners");
  if (all_large) {
    bool found = false;
    for (const auto& a : minimal_arrows(beta))
      if (!standard_variable(a) && !engine.class_of(a).zero) found = true;
    c.require(found, "large pair sets give a nonzero non-standard arrow", "no such arrow");
  }
}

void check_thicken(const Staircase& beta, bool smooth, Checker& c) {
  if (beta.r() >= 4) return;
  for (Exponent w = 1; w <= 2; ++w) {
    const auto t = thicken(beta, w);
    c.require(t.size() == beta.size() * static_cast<std::size_t>(w), "thickening size", "wrong cardinality");
    c.require(smooth_of(t) == smooth, "thickening preserves smoothness both ways",
              "thickening by " + std::to_string(w) + " changes the verdict");
  }
}

void check_truncate(const Staircase& beta, bool smooth, Checker& c) {
  for (std::size_t j = 0; j < beta.r(); ++j)
    for (Exponent h = 1; h < beta.width(j); ++h) {
      const auto t = truncate(beta, j, h);
      const std::string where = " at x" + std::to_string(j + 1) + " height " + std::to_string(h);

      // Generators under truncation.
      std::set<ExponentVector> lifted, divisible;
      for (const auto& m : beta.minimal_generators()) {
        if (m[j] >= h)
          c.require(t.is_minimal_generator(m.with(j, m[j] - h)), "truncated generators",
                    to_tuple_string(m) + " does not descend" + where);
        if (m[j] > h) lifted.insert(m.with(j, m[j] - h));
      }
      for (const auto& g : t.minimal_generators())
        if (g[j] > 0) divisible.insert(g);
      c.require(lifted == divisible, "truncated generators", "generators divisible by x_j do not match" + where);
      c.require(beta.width(j) == t.width(j) + h, "truncated width", "width does not drop by h" + where);

      if (!smooth) continue;
      TranslationEngine engine(t);
      c.require(nonstandard_minimal_arrows_vanish(engine), "truncation of smooth kills non-standard arrows",
                "non-standard minimal arrow survives" + where);
      if (hypothesis81(beta, j, h))
        c.require(smooth_of(t), "truncation under the generator hypothesis is smooth", "singular truncation" + where);
    }
}

void check_add_box(const Staircase& beta, bool smooth, bool compound, Checker& c) {
  if (beta.size() > 10) return;
  for (std::size_t j = 0; j < beta.r(); ++j)
    for (Exponent h = 1; h <= 2; ++h)
      for (int extra = 0; extra <= 1; ++extra) {
        auto widths = beta.widths();
        widths[j] = h;
        if (extra) {
          std::size_t k = (j + 1) % beta.r();
          if (k == j) continue;
          widths[k] += 1;
        }
        const auto added = add_box(beta, j, h, widths);
        const std::string where = " adding along x" + std::to_string(j + 1) + " height " + std::to_string(h);
        c.require(truncate(added, j, h) == beta, "box addition round trip", "truncation differs" + where);
        c.require(hypothesis81(added, j, h), "box addition satisfies the generator hypothesis", "fails" + where);
        c.require(smooth_of(added) == smooth, "box addition preserves smoothness both ways", "verdict changes" + where);
        if (compound) c.require(is_compound_box(added), "box addition keeps compound boxes", "not compound" + where);
      }
}

Outcome examine(const Staircase& beta, const std::set<Suite>& suites) {
  Outcome out;
  Checker c(out.checks);
  try {
    TranslationEngine engine(beta);
    const auto cot = class_report(engine);
    const auto st = classify(engine);
    out.smooth = cot.smooth;
    out.compound = st.is_compound_box;
    out.witness = !st.rigid_nonstandard_witnesses.empty();

    check_invariants(beta, engine, cot, st, c);
    if (suites.count(Suite::Oracle)) {
      auto t = tangent_dimension(beta);
      out.oracle_agrees = t == cot.dim;
      c.require(out.oracle_agrees, "oracle agreement",
                "tangent " + std::to_string(t) + " vs cotangent " + std::to_string(cot.dim));
    }
    if (suites.count(Suite::TwoVar)) check_two_var(beta, cot, st, c);
    if (suites.count(Suite::ThreeVar)) check_three_var(beta, cot, st, engine, c);
    if (suites.count(Suite::Boxes) && beta.is_box())
      c.require(cot.smooth, "boxes are smooth", "singular box");
    if (suites.count(Suite::Thicken)) check_thicken(beta, cot.smooth, c);
    if (suites.count(Suite::Truncate)) check_truncate(beta, cot.smooth, c);
    if (suites.count(Suite::AddBox)) check_add_box(beta, cot.smooth, st.is_compound_box, c);
  } catch (const CheckFailure& f) {
    out.violation = Violation{f.check, f.message, beta.to_file_text()};
  } catch (const Error& e) {
    out.violation = Violation{"exception", e.what(), beta.to_file_text()};
  }
  return out;
}

template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    });
  for (auto& w : workers) w.join();
}

void check_sample(const SampledInstance& s, const std::set<Suite>& suites, Checker& c) {
  const auto& beta = s.staircase;
  const auto cot = class_report(beta);
  if (suites.count(Suite::Oracle))
    c.require(tangent_dimension(beta) == cot.dim, "oracle agreement on constructor output", s.kind);
  if (s.kind == "box" && suites.count(Suite::Boxes)) {
    c.require(cot.smooth && cot.dim == cot.rn, "boxes are smooth", "singular box");
    for (const auto& a : build_bunch(beta).all())
      c.require(a.tail.support_size() == 1, "box bunch tails are corners", a.to_string());
  }
  if (s.kind == "union" && suites.count(Suite::Union)) {
    c.require(cot.smooth && cot.dim == cot.rn, "two-box unions are smooth",
              "dim " + std::to_string(cot.dim) + " rn " + std::to_string(cot.rn));
    const auto& b1 = s.boxes[0];
    const auto& b2 = s.boxes[1];
    for (const auto& g : beta.minimal_generators()) {
      bool ok = g.support_size() == 1;
      if (g.support_size() == 2) {
        for (std::size_t j = 0; j < beta.r(); ++j)
          for (std::size_t k = 0; k < beta.r(); ++k)
            if (b1[j] > b2[j] && b2[k] > b1[k] && g[j] == b2[j] && g[k] == b1[k]) ok = true;
      }
      c.require(ok, "two-box union generators", to_tuple_string(g));
    }
  }
  if (s.kind == "thicken" && suites.count(Suite::Thicken))
    c.require(cot.smooth == smooth_of(*s.base), "thickening preserves smoothness both ways", "verdict changes");
}

} // namespace

std::set<Suite> parse_suites(std::string_view text) {
  std::set<Suite> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto word = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (word == "all") {
      for (const auto& [s, name] : kSuiteNames) out.insert(s);
    } else {
      auto it = std::find_if(std::begin(kSuiteNames), std::end(kSuiteNames),
                             [&](const auto& kv) { return kv.second == word; });
      if (it == std::end(kSuiteNames)) throw Error("unknown verification suite '" + std::string(word) + "'");
      out.insert(it->first);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string_view suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (suite == s) return name;
  return "?";
}

std::optional<Violation> check_staircase(const Staircase& beta, const std::set<Suite>& suites,
                                         std::size_t* checks) {
  auto out = examine(beta, suites);
  if (checks) *checks += out.checks;
  return out.violation;
}

std::vector<SampledInstance> random_constructor_sample(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_widths = [&](std::size_t r, int hi) {
    std::vector<Exponent> w(r);
    for (auto& x : w) x = uniform(1, hi);
    return w;
  };
  auto volume = [](const std::vector<Exponent>& w) {
    std::size_t v = 1;
    for (auto x : w) v *= static_cast<std::size_t>(x);
    return v;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Staircase>> small;

  std::vector<SampledInstance> out;
  const char* kinds[] = {"box", "thicken", "addbox", "union"};
  while (out.size() < count) {
    const std::string kind = kinds[out.size() % 4];
    if (kind == "box") {
      auto w = random_widths(static_cast<std::size_t>(uniform(1, 4)), 4);
      if (volume(w) > 20) continue;
      out.push_back({kind, box(BoxSpec(w)), {BoxSpec(w)}, std::nullopt});
    } else if (kind == "thicken") {
      std::size_t r0 = static_cast<std::size_t>(uniform(1, 3));
      std::size_t n0 = static_cast<std::size_t>(uniform(1, 6));
      auto& pool = small[{r0, n0}];
      if (pool.empty()) pool = enumerate_staircases(r0, n0);
      const auto& base = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
      Exponent w = uniform(1, 3);
      if (base.size() * static_cast<std::size_t>(w) > 20) continue;
      out.push_back({kind, thicken(base, w), {}, base});
    } else if (kind == "addbox") {
      std::size_t r = static_cast<std::size_t>(uniform(2, 4));
      auto w = random_widths(r, 2);
      Staircase cur = box(BoxSpec(w));
      int steps = uniform(1, 3), applied = 0;
      for (int s = 0; s < steps; ++s) {
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(r) - 1));
        Exponent h = uniform(1, 2);
        auto widths = cur.widths();
        widths[j] = h;
        for (std::size_t k = 0; k < r; ++k)
          if (k != j) widths[k] += uniform(0, 1);
        auto next = add_box(cur, j, h, widths);
        if (next.size() > 20) break;
        cur = next;
        ++applied;
      }
      if (applied == 0) continue;
      out.push_back({kind, cur, {}, std::nullopt});
    } else {
      std::size_t r = static_cast<std::size_t>(uniform(2, 4));
      BoxSpec b1(random_widths(r, 3)), b2(random_widths(r, 3));
      auto u = two_box_union(b1, b2);
      if (u.size() > 20) continue;
      out.push_back({kind, u, {b1, b2}, std::nullopt});
    }
  }
  return out;
}

CensusResult run_census(const CensusOptions& options) {
  if (options.r < 1 || options.n_max < 1) throw DimensionError("census needs r >= 1 and n >= 1");
  CensusResult result;
  for (std::size_t n = 1; n <= options.n_max && !result.violation; ++n) {
    const auto instances = enumerate_staircases(options.r, n);
    std::vector<Outcome> outcomes(instances.size());
    parallel_for(instances.size(), options.jobs,
                 [&](std::size_t i) { outcomes[i] = examine(instances[i], options.suites); });

    CensusRow row{options.r, n, instances.size(), 0, 0, 0, 0, 0};
    for (const auto& o : outcomes) {
      result.checks += o.checks;
      if (o.violation && !result.violation) result.violation = o.violation;
      row.smooth += o.smooth;
      row.singular += !o.smooth;
      row.compound_box += o.compound;
      row.witness += o.witness;
      row.oracle_agreements += o.oracle_agrees;
    }
    result.rows.push_back(row);
  }

  const bool sampled = options.suites.count(Suite::Oracle) || options.suites.count(Suite::Boxes) ||
                       options.suites.count(Suite::Union) || options.suites.count(Suite::Thicken);
  if (!result.violation && sampled && options.random_samples > 0) {
    const auto sample = random_constructor_sample(options.seed, options.random_samples);
    std::vector<std::optional<Violation>> found(sample.size());
    std::vector<std::size_t> counts(sample.size(), 0);
    parallel_for(sample.size(), options.jobs, [&](std::size_t i) {
      Checker c(counts[i]);
      try {
        check_sample(sample[i], options.suites, c);
      } catch (const CheckFailure& f) {
        found[i] = Violation{f.check, f.message, sample[i].staircase.to_file_text()};
      } catch (const Error& e) {
        found[i] = Violation{"exception", e.what(), sample[i].staircase.to_file_text()};
      }
    });
    result.random_instances = sample.size();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      result.checks += counts[i];
      if (found[i] && !result.violation) result.violation = found[i];
    }
  }

  if (!result.violation && options.suites.count(Suite::Union)) {
    const auto u = two_box_union(BoxSpec({2, 2, 1, 1}), BoxSpec({1, 1, 2, 2}));
    const auto cot = class_report(u);
    ++result.checks;
    if (!(cot.dim == 28 && cot.smooth && !is_compound_box(u)))
      result.violation = Violation{"four-variable two-box union", "expected dim 28, smooth, not compound",
                                   u.to_file_text()};
  }
  return result;
}

std::string census_to_text(const CensusOptions& options, const CensusResult& result) {
  std::ostringstream out;
  out << "census r=" << options.r << " n<=" << options.n_max << " verify=";
  bool first = true;
  for (auto s : options.suites) {
    out << (first ? "" : ",") << suite_name(s);
    first = false;
  }
  if (options.suites.empty()) out << "none";
  out << " seed=" << options.seed << "\n";
  out << "   r    n   total  smooth  singular  compound  witness  oracle\n";
  for (const auto& row : result.rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%4zu %4zu %7zu %7zu %9zu %9zu %8zu %7zu\n", row.r, row.n, row.total, row.smooth,
                  row.singular, row.compound_box, row.witness, row.oracle_agreements);
    out << line;
  }
  out << "random constructor instances: " << result.random_instances << "\n";
  out << "checks: " << result.checks << "\n";
  if (result.violation) {
    out << "VIOLATION [" << result.violation->check << "]: " << result.violation->message << "\n";
    out << result.violation->staircase_text;
  } else {
    out << "all checks passed\n";
  }
  return out.str();
}

std::string census_to_json(const CensusOptions& options, const CensusResult& result) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : result.rows)
    rows.push_back(json{{"r", row.r},
                        {"n", row.n},
                        {"total", row.total},
                        {"smooth", row.smooth},
                        {"singular", row.singular},
                        {"compound_box", row.compound_box},
                        {"witness", row.witness},
                        {"oracle_agreements", row.oracle_agreements}});
  json suites = json::array();
  for (auto s : options.suites) suites.push_back(std::string(suite_name(s)));
  json j{{"schema", kJsonSchemaVersion},
         {"r", options.r},
         {"n_max", options.n_max},
         {"verify", suites},
         {"seed", options.seed},
         {"rows", rows},
         {"random_instances", result.random_instances},
         {"checks", result.checks},
         {"violation", nullptr}};
  if (result.violation)
    j["violation"] = json{{"check", result.violation->check},
                          {"message", result.violation->message},
                          {"staircase", result.violation->staircase_text}};
  return j.dump(2) + "\n";
}

} // namespace hilbsmooth
