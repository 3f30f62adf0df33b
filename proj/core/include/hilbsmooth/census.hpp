#ifndef HILBSMOOTH_CENSUS_HPP
#define HILBSMOOTH_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

enum class Suite { Oracle, TwoVar, ThreeVar, Boxes, Thicken, Truncate, AddBox, Union };

/// Parses a --verify value; "all" selects every suite.
std::set<Suite> parse_suites(std::string_view text);
std::string_view suite_name(Suite s);

struct CensusOptions {
  std::size_t r = 2;
  std::size_t n_max = 4;
  std::set<Suite> suites;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  /// Size of the seeded random constructor sample used by the boxes and
  /// union suites and by the oracle suite.
  std::size_t random_samples = 200;
};

struct CensusRow {
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t smooth = 0;
  std::size_t singular = 0;
  std::size_t compound_box = 0;
  std::size_t witness = 0;
  std::size_t oracle_agreements = 0;

  bool operator==(const CensusRow&) const = default;
};

struct Violation {
  std::string check;
  std::string message;
  std::string staircase_text;  // the counterexample in the staircase file format
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::size_t random_instances = 0;
  std::size_t checks = 0;
  std::optional<Violation> violation;  // first one in enumeration order
};

CensusResult run_census(const CensusOptions& options);

/// Every property the census verifies on a single staircase under the given
/// suites. Returns the first violation, if any.
std::optional<Violation> check_staircase(const Staircase& beta, const std::set<Suite>& suites,
                                         std::size_t* checks = nullptr);

struct SampledInstance {
  std::string kind;  // "box", "thicken", "addbox", or "union"
  Staircase staircase;
  std::vector<BoxSpec> boxes;      // the box, or both boxes of a union
  std::optional<Staircase> base;   // the thickened staircase
};

/// Seeded outputs of the structural constructors with r <= 4 and n <= 20,
/// cycling through boxes, thickenings, box-addition chains and two-box unions.
std::vector<SampledInstance> random_constructor_sample(std::uint64_t seed, std::size_t count);

std::string census_to_text(const CensusOptions& options, const CensusResult& result);
std::string census_to_json(const CensusOptions& options, const CensusResult& result);

} // namespace hilbsmooth

#endif
