#ifndef HILBSMOOTH_BUNCH_HPP
#define HILBSMOOTH_BUNCH_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hilbsmooth/arrow.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

/// x_i-offset (r-1 entries) used to group standard arrows.
using Offset = std::vector<Exponent>;

/// Arrows from the corner monomial w_i e_i, grouped by offset. Each group is
/// the x_i-shadow of its top member, listed by increasing head x_i-degree.
std::map<Offset, std::vector<Arrow>> corner_fan(const Staircase& beta, std::size_t var);

/// Replaces an advanceable x_var-shadow by its promotion image: a shadow of
/// equal size with a minimal-generator tail of smaller x_var-height. The
/// advancing path is a shortest one, ties broken by the lexicographically
/// least head; the generator is the lexicographically least candidate.
/// Image arrows are listed by increasing head x_var-degree. Throws
/// NotAdvanceable.
std::vector<Arrow> promote_shadow(TranslationEngine& engine, const std::vector<Arrow>& shadow,
                                  std::size_t var);
std::vector<Arrow> promote_shadow(const Staircase& beta, const std::vector<Arrow>& shadow,
                                  std::size_t var);

/// The standard x_var-sub-bunch: n minimal x_var-standard arrows, none of
/// which can be advanced. Sorted by (offset, head x_var-degree).
std::vector<Arrow> build_sub_bunch(TranslationEngine& engine, std::size_t var);

struct StandardBunch {
  std::vector<std::vector<Arrow>> per_variable;

  std::size_t size() const;
  std::vector<Arrow> all() const;
};

StandardBunch build_bunch(const Staircase& beta);
StandardBunch build_bunch(TranslationEngine& engine);

/// Rechecks every defining property of a standard bunch from scratch and
/// returns one message per violation; empty means the bunch is valid.
std::vector<std::string> verify_bunch(const Staircase& beta, const StandardBunch& bunch);

/// Grouped by variable, then offset, arrows in "d -> j" form.
std::string render_bunch(const StandardBunch& bunch);

} // namespace hilbsmooth

#endif
