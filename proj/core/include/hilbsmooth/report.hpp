#ifndef HILBSMOOTH_REPORT_HPP
#define HILBSMOOTH_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbsmooth/bunch.hpp"
#include "hilbsmooth/classify.hpp"
#include "hilbsmooth/cotangent.hpp"
#include "hilbsmooth/oracle.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

inline constexpr int kJsonSchemaVersion = 1;

struct AnalysisOptions {
  bool oracle = true;
  bool bunch = true;
};

struct AnalysisReport {
  Staircase staircase;
  CotangentReport cotangent;
  StructureReport structure;
  std::optional<StandardBunch> bunch;
  std::vector<std::string> bunch_violations;
  std::optional<CrossCheck> oracle;
};

AnalysisReport analyze(const Staircase& beta, const AnalysisOptions& options = {});

std::string to_text(const AnalysisReport& report);
std::string to_json(const AnalysisReport& report);

/// Text form of a decomposition: "base (w1,...,wr)" then one
/// "add x<j> h=<h> widths=(...)" line per step.
std::string to_text(const CompoundDecomposition& decomposition);

} // namespace hilbsmooth

#endif
