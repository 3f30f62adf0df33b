#ifndef HILBSMOOTH_MONOMIAL_HPP
#define HILBSMOOTH_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsmooth {

using Exponent = int;

/// Signed integer tuple; the difference of two exponent vectors.
using LatticeVector = std::vector<int>;

/// Exponent tuple of a monomial x^d in r variables.
///
/// Components are non-negative; the constructor enforces it. Ordering is
/// lexicographic on the tuple and is the canonical order used everywhere a
/// deterministic choice is needed.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t r) : e_(r, 0) {}
  ExponentVector(std::initializer_list<Exponent> list);
  explicit ExponentVector(std::vector<Exponent> exps);

  static ExponentVector zero(std::size_t r) { return ExponentVector(r); }
  static ExponentVector unit(std::size_t r, std::size_t var, Exponent power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return e_; }

  Exponent degree() const noexcept;
  bool is_zero() const noexcept;

  /// Number of variables with a positive exponent.
  std::size_t support_size() const noexcept;

  /// Copy with component `var` replaced by `value` (value must be >= 0).
  ExponentVector with(std::size_t var, Exponent value) const;

  /// Copy with component `var` deleted; r-1 entries.
  std::vector<Exponent> without(std::size_t var) const;

  /// Copy with `value` appended as a new last variable.
  ExponentVector extended(Exponent value) const;

  /// this - other as a signed tuple.
  LatticeVector minus(const ExponentVector& other) const;

  /// this + shift, or nullopt when a component would become negative.
  std::optional<ExponentVector> shifted(const LatticeVector& shift) const;

  /// Space-separated decimal rendering "e1 e2 ... er".
  std::string to_string() const;

  /// Inverse of to_string. Throws DimensionError on malformed input.
  static ExponentVector parse(std::string_view text);

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

private:
  std::vector<Exponent> e_;
};

std::ostream& operator<<(std::ostream& out, const ExponentVector& v);

/// "(e1,e2,...,er)" rendering used in arrow text.
std::string to_tuple_string(const ExponentVector& v);
std::string to_tuple_string(const LatticeVector& v);

/// a_i <= b_i for all i. Throws DimensionError on length mismatch.
bool divides(const ExponentVector& a, const ExponentVector& b);

/// Componentwise maximum. Throws DimensionError on length mismatch.
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

enum class Direction { Down = -1, Up = +1 };

/// Unit step in variable `var` (0-based). nullopt means the result left the
/// first orthant, which is an ordinary outcome.
std::optional<ExponentVector> step(const ExponentVector& a, std::size_t var, Direction dir);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

} // namespace hilbsmooth

template <>
struct std::hash<hilbsmooth::ExponentVector> : hilbsmooth::ExponentVectorHash {};

#endif
