#include "hilbsmooth/bunch.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

namespace {

ExponentVector tail_of(const ExponentVector& head, const LatticeVector& vector) {
  std::vector<Exponent> t(head.size());
  for (std::size_t k = 0; k < head.size(); ++k) t[k] = head[k] - vector[k];
  return ExponentVector(std::move(t));
}

// First position along a shortest advancing path from which a step down in
// x_var lowers the height or exits the orthant.
Arrow advancing_position(const Staircase& beta, const Arrow& top, std::size_t var) {
  const LatticeVector v = top.vector();
  const Exponent h = top.tail[var];
  std::unordered_set<ExponentVector, ExponentVectorHash> seen{top.head};
  std::vector<ExponentVector> level{top.head};
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (const auto& head : level) {
      auto tail = tail_of(head, v);
      if (tail[var] == h && !beta.contains(tail.with(var, h - 1))) return Arrow{tail, head};
    }
    std::vector<ExponentVector> next;
    for (const auto& head : level)
      for (std::size_t k = 0; k < head.size(); ++k)
        for (auto dir : {Direction::Down, Direction::Up}) {
          auto n = step(head, k, dir);
          if (n && !seen.count(*n) && is_legal_position(beta, *n, v)) {
            seen.insert(*n);
            next.push_back(std::move(*n));
          }
        }
    level = std::move(next);
  }
  throw NotAdvanceable(top.to_string() + " cannot be advanced in x_" + std::to_string(var + 1));
}

bool by_offset_then_degree(const Arrow& a, const Arrow& b, std::size_t var) {
  auto oa = a.vector(), ob = b.vector();
  oa.erase(oa.begin() + static_cast<std::ptrdiff_t>(var));
  ob.erase(ob.begin() + static_cast<std::ptrdiff_t>(var));
  if (oa != ob) return oa < ob;
  return a.head[var] < b.head[var];
}

} // namespace

std::map<Offset, std::vector<Arrow>> corner_fan(const Staircase& beta, std::size_t var) {
  if (var >= beta.r()) throw DimensionError("variable index out of range");
  const auto corner = beta.corner(var);
  std::map<Offset, std::vector<Arrow>> fan;
  for (const auto& j : beta.members()) fan[j.without(var)].push_back(Arrow{corner, j});
  for (auto& [v, arrows] : fan)
    std::sort(arrows.begin(), arrows.end(),
              [&](const Arrow& a, const Arrow& b) { return a.head[var] < b.head[var]; });
  return fan;
}

std::vector<Arrow> promote_shadow(TranslationEngine& engine, const std::vector<Arrow>& input,
                                  std::size_t var) {
  const Staircase& beta = engine.staircase();
  if (input.empty()) throw NotAdvanceable("empty shadow");
  const Arrow top = *std::max_element(input.begin(), input.end(), [&](const Arrow& a, const Arrow& b) {
    return a.head[var] < b.head[var];
  });
  if (!is_standard_for(top, var))
    throw NotStandardFor(top.to_string() + " is not standard for x_" + std::to_string(var + 1));
  {
    auto expected = shadow(top, var);
    auto given = input;
    std::sort(given.begin(), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected) throw Error("arrow set is not the x_" + std::to_string(var + 1) + "-shadow of " + top.to_string());
  }
  if (!engine.can_advance(top, var))
    throw NotAdvanceable(top.to_string() + " cannot be advanced in x_" + std::to_string(var + 1));

  const Arrow first = advancing_position(beta, top, var);
  const auto below = first.tail.with(var, first.tail[var] - 1);
  const ExponentVector* gen = nullptr;
  for (const auto& g : beta.minimal_generators())
    if (divides(g, below)) {
      gen = &g;
      break;
    }
  if (!gen) throw InternalInvariantViolation("no minimal generator divides " + to_tuple_string(below));

  // Slide the tail down to the generator in every direction except x_var.
  const auto lowered = gen->with(var, first.tail[var]);
  LatticeVector shift = lowered.minus(first.tail);
  auto head2 = first.head.shifted(shift);
  if (!head2) throw InternalInvariantViolation("promoted head left the orthant");

  auto image = shadow(Arrow{*gen, *head2}, var);
  for (const auto& a : image) {
    if (!beta.contains(a.head) || beta.contains(a.tail) || !is_standard_for(a, var) ||
        a.tail[var] >= top.tail[var] || offset(a, var) != offset(top, var))
      throw InternalInvariantViolation("bad promotion image arrow " + a.to_string());
  }
  return image;
}

std::vector<Arrow> promote_shadow(const Staircase& beta, const std::vector<Arrow>& shadow,
                                  std::size_t var) {
  TranslationEngine engine(beta);
  return promote_shadow(engine, shadow, var);
}

std::vector<Arrow> build_sub_bunch(TranslationEngine& engine, std::size_t var) {
  std::vector<Arrow> result;
  for (auto& [v, group] : corner_fan(engine.staircase(), var)) {
    // group[k] is the arrow whose head has x_var-degree k.
    std::vector<Arrow> current = std::move(group);
    while (true) {
      std::ptrdiff_t top = -1;
      for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(current.size()) - 1; k >= 0; --k)
        if (engine.can_advance(current[static_cast<std::size_t>(k)], var)) {
          top = k;
          break;
        }
      if (top < 0) break;
      const Arrow& chosen = current[static_cast<std::size_t>(top)];
      auto members = shadow(chosen, var);
      for (std::size_t k = 0; k < members.size(); ++k)
        if (current[k] != members[k])
          throw InternalInvariantViolation("advanceable set is not a shadow at " + chosen.to_string());
      auto image = promote_shadow(engine, members, var);
      std::copy(image.begin(), image.end(), current.begin());
    }
    result.insert(result.end(), current.begin(), current.end());
  }
  std::sort(result.begin(), result.end(),
            [&](const Arrow& a, const Arrow& b) { return by_offset_then_degree(a, b, var); });
  return result;
}

std::size_t StandardBunch::size() const {
  std::size_t total = 0;
  for (const auto& s : per_variable) total += s.size();
  return total;
}

std::vector<Arrow> StandardBunch::all() const {
  std::vector<Arrow> out;
  for (const auto& s : per_variable) out.insert(out.end(), s.begin(), s.end());
  return out;
}

StandardBunch build_bunch(TranslationEngine& engine) {
  StandardBunch bunch;
  for (std::size_t i = 0; i < engine.staircase().r(); ++i)
    bunch.per_variable.push_back(build_sub_bunch(engine, i));
  return bunch;
}

StandardBunch build_bunch(const Staircase& beta) {
  TranslationEngine engine(beta);
  return build_bunch(engine);
}

std::vector<std::string> verify_bunch(const Staircase& beta, const StandardBunch& bunch) {
  std::vector<std::string> bad;
  const std::size_t r = beta.r(), n = beta.size();
  if (bunch.per_variable.size() != r) {
    bad.push_back("bunch has " + std::to_string(bunch.per_variable.size()) + " sub-bunches, expected " +
                  std::to_string(r));
    return bad;
  }

  std::set<std::pair<LatticeVector, ExponentVector>> keys;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& sub = bunch.per_variable[i];
    const std::string var = "x_" + std::to_string(i + 1);
    if (sub.size() != n)
      bad.push_back("sub-bunch for " + var + " has " + std::to_string(sub.size()) + " arrows, expected " +
                    std::to_string(n));

    std::set<ExponentVector> positions;
    for (const auto& a : sub) {
      const std::string name = a.to_string();
      if (!beta.is_minimal_generator(a.tail)) bad.push_back(name + ": tail is not a minimal generator");
      if (!beta.contains(a.head)) {
        bad.push_back(name + ": head outside the staircase");
        continue;
      }
      if (!is_standard_for(a, i)) {
        bad.push_back(name + ": not standard for " + var);
        continue;
      }
      // Independent class computation, not the memoized engine.
      const ArrowClass cls = translation_class(beta, a);
      if (cls.zero) bad.push_back(name + ": zero class");
      if (!keys.insert(cls.key()).second) bad.push_back(name + ": equivalent to another bunch arrow");
      if (can_advance(beta, a, i)) bad.push_back(name + ": can be advanced");

      // (head degree, offset) recombined into a head-shaped tuple.
      auto v = a.vector();
      v[i] = a.head[i];
      ExponentVector position(std::vector<Exponent>(v.begin(), v.end()));
      if (!positions.insert(position).second)
        bad.push_back(name + ": repeats a (head degree, offset) pair in " + var);
      else if (!beta.contains(position))
        bad.push_back(name + ": (head degree, offset) pair not realized by a standard arrow");
    }

    std::set<Arrow> members(sub.begin(), sub.end());
    for (const auto& [v, group] : corner_fan(beta, i))
      for (const auto& a : group)
        if (!can_advance(beta, a, i) && !members.count(a))
          bad.push_back(a.to_string() + ": unadvanceable corner arrow missing from " + var + " sub-bunch");
  }
  return bad;
}

std::string render_bunch(const StandardBunch& bunch) {
  std::ostringstream out;
  for (std::size_t i = 0; i < bunch.per_variable.size(); ++i) {
    out << "x" << i + 1 << ":\n";
    std::map<Offset, std::vector<const Arrow*>> groups;
    for (const auto& a : bunch.per_variable[i]) groups[offset(a, i)].push_back(&a);
    for (const auto& [v, arrows] : groups) {
      out << "  offset " << to_tuple_string(LatticeVector(v.begin(), v.end())) << ":";
      for (const auto* a : arrows) out << "  " << a->to_string();
      out << "\n";
    }
  }
  return out.str();
}

} // namespace hilbsmooth
