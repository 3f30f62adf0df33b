#ifndef HILBSMOOTH_CLASSIFY_HPP
#define HILBSMOOTH_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hilbsmooth/arrow.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

/// Non-standard arrows from a minimal generator to a maximal basis monomial.
/// Each one cannot be translated and certifies that beta is singular.
std::vector<Arrow> rigid_nonstandard_witnesses(const Staircase& beta);

/// For r = 3: minimal generators involving only x_i and x_j, keyed by the
/// 0-based pair (i, j) with i < j. Throws WrongArity otherwise.
using GPairs = std::map<std::pair<std::size_t, std::size_t>, std::vector<ExponentVector>>;
GPairs g_pairs(const Staircase& beta);

/// One box addition: add_box(current, var, height, widths).
struct BoxAddition {
  std::size_t var = 0;
  Exponent height = 0;
  std::vector<Exponent> widths;

  bool operator==(const BoxAddition&) const = default;
};

/// A base box followed by box additions applied in order.
struct CompoundDecomposition {
  BoxSpec base;
  std::vector<BoxAddition> steps;
};

Staircase replay(const CompoundDecomposition& decomposition);

/// Exact backtracking search over peel directions and heights. A peel at
/// (j, h) is valid iff the slab {m_j < h} is a box whose other widths are at
/// least those of truncate(beta, j, h) and adding that box back to the
/// truncation reproduces beta.
std::optional<CompoundDecomposition> compound_box_decomposition(const Staircase& beta);
bool is_compound_box(const Staircase& beta);

struct StructureReport {
  bool smooth = false;
  std::size_t dim = 0;
  std::size_t rn = 0;
  std::vector<Arrow> rigid_nonstandard_witnesses;
  bool is_box = false;
  bool is_compound_box = false;
  std::optional<CompoundDecomposition> decomposition;
  std::optional<GPairs> g_pairs;  // r = 3 only
  bool nonstandard_minimal_arrows_vanish = false;
};

/// Aggregates the above. For r = 3 it also checks that smoothness agrees
/// with the compound-box test and with vanishing of all non-standard minimal
/// arrows, throwing InternalInvariantViolation otherwise.
StructureReport classify(const Staircase& beta);
StructureReport classify(TranslationEngine& engine);

} // namespace hilbsmooth

#endif
