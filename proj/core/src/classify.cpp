#include "hilbsmooth/classify.hpp"

#include <map>

#include "hilbsmooth/cotangent.hpp"
#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

std::vector<Arrow> rigid_nonstandard_witnesses(const Staircase& beta) {
  std::vector<Arrow> out;
  for (const auto& b : beta.minimal_generators())
    for (const auto& j : beta.maximal_monomials()) {
      Arrow a{b, j};
      if (!standard_variable(a)) out.push_back(a);
    }
  return out;
}

GPairs g_pairs(const Staircase& beta) {
  if (beta.r() != 3) throw WrongArity("generator pair sets need exactly 3 variables");
  GPairs out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto& set = out[{i, j}];
      for (const auto& g : beta.minimal_generators()) {
        std::size_t other = 3 - i - j;
        if (g[other] == 0) set.push_back(g);
      }
    }
  return out;
}

Staircase replay(const CompoundDecomposition& decomposition) {
  Staircase cur = box(decomposition.base);
  for (const auto& s : decomposition.steps) cur = add_box(cur, s.var, s.height, s.widths);
  return cur;
}

namespace {

class CompoundSearch {
public:
  std::optional<CompoundDecomposition> run(const Staircase& beta) {
    auto it = memo_.find(beta.members());
    if (it != memo_.end()) return it->second;
    auto result = search(beta);
    memo_.emplace(beta.members(), result);
    return result;
  }

private:
  std::optional<CompoundDecomposition> search(const Staircase& beta) {
    if (beta.is_box()) return CompoundDecomposition{BoxSpec(beta.widths()), {}};
    const std::size_t r = beta.r();
    for (std::size_t j = 0; j < r; ++j)
      for (Exponent h = beta.width(j) - 1; h >= 1; --h) {
        std::vector<Exponent> slab(r, 0);
        std::size_t slab_size = 0;
        for (const auto& m : beta.members())
          if (m[j] < h) {
            ++slab_size;
            for (std::size_t k = 0; k < r; ++k) slab[k] = std::max(slab[k], m[k] + 1);
          }
        std::size_t volume = 1;
        for (auto w : slab) volume *= static_cast<std::size_t>(w);
        if (volume != slab_size) continue;

        const Staircase t = truncate(beta, j, h);
        bool wide_enough = true;
        for (std::size_t k = 0; k < r; ++k)
          if (k != j && slab[k] < t.width(k)) wide_enough = false;
        if (!wide_enough || !(add_box(t, j, h, slab) == beta)) continue;

        if (auto sub = run(t)) {
          sub->steps.push_back(BoxAddition{j, h, slab});
          return sub;
        }
      }
    return std::nullopt;
  }

  std::map<std::vector<ExponentVector>, std::optional<CompoundDecomposition>> memo_;
};

} // namespace

std::optional<CompoundDecomposition> compound_box_decomposition(const Staircase& beta) {
  return CompoundSearch().run(beta);
}

bool is_compound_box(const Staircase& beta) { return compound_box_decomposition(beta).has_value(); }

StructureReport classify(TranslationEngine& engine) {
  const Staircase& beta = engine.staircase();
  StructureReport rep;
  const auto cot = class_report(engine);
  rep.smooth = cot.smooth;
  rep.dim = cot.dim;
  rep.rn = cot.rn;
  rep.rigid_nonstandard_witnesses = rigid_nonstandard_witnesses(beta);
  rep.is_box = beta.is_box();
  rep.decomposition = compound_box_decomposition(beta);
  rep.is_compound_box = rep.decomposition.has_value();
  rep.nonstandard_minimal_arrows_vanish = cot.nonstandard_count == cot.nonstandard_zero_count;
  if (beta.r() == 3) {
    rep.g_pairs = g_pairs(beta);
    if (rep.smooth != rep.is_compound_box)
      throw InternalInvariantViolation("three-variable staircase: smoothness and compound-box test disagree");
    if (rep.smooth != rep.nonstandard_minimal_arrows_vanish)
      throw InternalInvariantViolation(
          "three-variable staircase: smoothness and vanishing of non-standard arrows disagree");
  }
  if (!rep.rigid_nonstandard_witnesses.empty() && rep.smooth)
    throw InternalInvariantViolation("smooth staircase has a rigid non-standard arrow");
  return rep;
}

StructureReport classify(const Staircase& beta) {
  TranslationEngine engine(beta);
  return classify(engine);
}

} // namespace hilbsmooth
