#ifndef HILBSMOOTH_COTANGENT_HPP
#define HILBSMOOTH_COTANGENT_HPP

#include <cstddef>
#include <vector>

#include "hilbsmooth/arrow.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

/// All g*n arrows with tail a minimal generator and head in beta, sorted by
/// (tail, head).
std::vector<Arrow> minimal_arrows(const Staircase& beta);

struct CotangentReport {
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t dim = 0;  // dim M/M^2
  std::size_t rn = 0;
  bool smooth = false;
  std::vector<ArrowClass> classes;  // nonzero classes met by minimal arrows, sorted by key
  std::size_t minimal_arrow_count = 0;
  std::size_t zero_count = 0;
  std::size_t standard_zero_count = 0;
  std::size_t nonstandard_count = 0;
  std::size_t nonstandard_zero_count = 0;
};

/// Number of distinct nonzero translation classes among minimal arrows.
std::size_t cotangent_dimension(const Staircase& beta);
std::size_t cotangent_dimension(TranslationEngine& engine);

bool is_smooth(const Staircase& beta);

CotangentReport class_report(const Staircase& beta);
CotangentReport class_report(TranslationEngine& engine);

/// True iff every non-standard minimal arrow lies in a zero class.
bool nonstandard_minimal_arrows_vanish(TranslationEngine& engine);

} // namespace hilbsmooth

#endif
