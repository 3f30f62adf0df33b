#include "hilbsmooth/cotangent.hpp"

#include <algorithm>
#include <map>

namespace hilbsmooth {

std::vector<Arrow> minimal_arrows(const Staircase& beta) {
  std::vector<Arrow> out;
  out.reserve(beta.minimal_generators().size() * beta.size());
  for (const auto& b : beta.minimal_generators())
    for (const auto& j : beta.members()) out.push_back(Arrow{b, j});
  return out;
}

CotangentReport class_report(TranslationEngine& engine) {
  const Staircase& beta = engine.staircase();
  CotangentReport rep;
  rep.r = beta.r();
  rep.n = beta.size();
  rep.rn = rep.r * rep.n;

  std::map<std::pair<LatticeVector, ExponentVector>, const ArrowClass*> nonzero;
  for (const auto& a : minimal_arrows(beta)) {
    ++rep.minimal_arrow_count;
    const ArrowClass& cls = engine.class_of(a);
    bool standard = standard_variable(a).has_value();
    if (!standard) ++rep.nonstandard_count;
    if (cls.zero) {
      ++rep.zero_count;
      ++(standard ? rep.standard_zero_count : rep.nonstandard_zero_count);
    } else {
      nonzero.emplace(cls.key(), &cls);
    }
  }
  for (const auto& [key, cls] : nonzero) rep.classes.push_back(*cls);
  rep.dim = rep.classes.size();
  rep.smooth = rep.dim == rep.rn;
  return rep;
}

CotangentReport class_report(const Staircase& beta) {
  TranslationEngine engine(beta);
  return class_report(engine);
}

std::size_t cotangent_dimension(TranslationEngine& engine) { return class_report(engine).dim; }

std::size_t cotangent_dimension(const Staircase& beta) { return class_report(beta).dim; }

bool is_smooth(const Staircase& beta) { return class_report(beta).smooth; }

bool nonstandard_minimal_arrows_vanish(TranslationEngine& engine) {
  for (const auto& a : minimal_arrows(engine.staircase()))
    if (!standard_variable(a) && !engine.class_of(a).zero) return false;
  return true;
}

} // namespace hilbsmooth
