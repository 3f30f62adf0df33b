#ifndef HILBSMOOTH_STAIRCASE_HPP
#define HILBSMOOTH_STAIRCASE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hilbsmooth/monomial.hpp"

namespace hilbsmooth {

/// Side lengths (w_1, ..., w_r) of a box; every entry >= 1.
class BoxSpec {
public:
  explicit BoxSpec(std::vector<Exponent> widths);

  std::size_t size() const noexcept { return widths_.size(); }
  Exponent operator[](std::size_t i) const { return widths_[i]; }
  const std::vector<Exponent>& widths() const noexcept { return widths_; }

  /// Parses "w1,w2,...,wr".
  static BoxSpec parse(std::string_view text);

private:
  std::vector<Exponent> widths_;
};

/// A finite division-closed set of monomials (a basis set, or staircase).
///
/// Its complement generates a monomial ideal of colength n = size(). Instances
/// are immutable; widths, minimal generators and maximal monomials are
/// computed once at construction. Members are kept in lexicographic order.
///
/// Variable indices in this API are 0-based.
class Staircase {
public:
  /// Throws EmptyInput, DimensionError, or NotDivisionClosed (with a witness).
  static Staircase from_monomials(const std::vector<ExponentVector>& members, std::size_t r);

  /// The complement of the ideal generated by `gens`. Throws NotAntichain if
  /// two generators are comparable, InfiniteColength if some variable has no
  /// pure-power generator.
  static Staircase from_minimal_generators(const std::vector<ExponentVector>& gens,
                                           std::size_t r);

  std::size_t r() const noexcept { return r_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<ExponentVector>& members() const noexcept { return members_; }
  bool contains(const ExponentVector& m) const;

  /// w_i: the least w with w*e_i outside the set.
  const std::vector<Exponent>& widths() const noexcept { return widths_; }
  Exponent width(std::size_t var) const { return widths_.at(var); }

  /// The i-th corner monomial w_i * e_i.
  ExponentVector corner(std::size_t var) const;

  /// Minimal generators of the ideal, sorted lexicographically.
  const std::vector<ExponentVector>& minimal_generators() const noexcept { return gens_; }
  bool is_minimal_generator(const ExponentVector& m) const;

  /// Members maximal under divisibility, sorted lexicographically.
  const std::vector<ExponentVector>& maximal_monomials() const noexcept { return maximal_; }
  bool is_maximal(const ExponentVector& m) const;

  bool is_box() const noexcept;
  Exponent max_exponent() const noexcept;

  bool operator==(const Staircase& other) const {
    return r_ == other.r_ && members_ == other.members_;
  }

  /// Staircase file text: header, size line, one member per line.
  std::string to_file_text() const;

private:
  Staircase(std::vector<ExponentVector> sorted_members, std::size_t r);

  std::size_t r_ = 0;
  std::vector<ExponentVector> members_;
  std::unordered_set<ExponentVector, ExponentVectorHash> lookup_;
  std::vector<Exponent> widths_;
  std::vector<ExponentVector> gens_;
  std::unordered_set<ExponentVector, ExponentVectorHash> gen_lookup_;
  std::vector<ExponentVector> maximal_;
};

/// Parses the staircase file format. Rejects unsorted, duplicated or
/// non-closed member lists with a line-numbered ParseError.
Staircase parse_staircase(std::string_view text);

Staircase read_staircase_file(const std::string& path);
void write_staircase_file(const Staircase& beta, const std::string& path);

// Constructors.

Staircase box(const BoxSpec& spec);

/// {(j0, s) : j0 in base, 0 <= s < w}; one more variable than `base`.
Staircase thicken(const Staircase& base, Exponent w);

/// {m : m + h*e_var in beta}. Throws NothingAtHeight if nothing reaches h.
Staircase truncate(const Staircase& beta, std::size_t var, Exponent h);

/// (h*e_var + beta) united with the box whose side is h along `var` and
/// widths[k] elsewhere. widths[var] must equal h; widths[k] >= beta's width
/// for k != var, otherwise WidthTooSmall.
Staircase add_box(const Staircase& beta, std::size_t var, Exponent h,
                  const std::vector<Exponent>& widths);

Staircase two_box_union(const BoxSpec& first, const BoxSpec& second);

/// Minimal-generator condition under which a truncation of a smooth set is
/// again smooth: for every generator m and k != var, m_var < h and m_k > 0
/// imply m_k >= width_k of truncate(beta, var, h).
bool hypothesis81(const Staircase& beta, std::size_t var, Exponent h);

// Enumeration.

/// Visits every staircase of size n in r variables exactly once, in a
/// deterministic order. The callback returns false to stop early.
void for_each_staircase(std::size_t r, std::size_t n,
                        const std::function<bool(const Staircase&)>& visit);

std::vector<Staircase> enumerate_staircases(std::size_t r, std::size_t n);

} // namespace hilbsmooth

#endif
