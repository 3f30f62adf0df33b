#ifndef HILBSMOOTH_ARROW_HPP
#define HILBSMOOTH_ARROW_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilbsmooth/monomial.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

/// The coefficient c^d_j drawn as an arrow from tail d (outside the
/// staircase) to head j (inside it).
struct Arrow {
  ExponentVector tail;
  ExponentVector head;

  /// head - tail; invariant under translation.
  LatticeVector vector() const { return head.minus(tail); }

  /// "(d1,...,dr) -> (j1,...,jr)".
  std::string to_string() const;
  static Arrow parse(std::string_view text);

  auto operator<=>(const Arrow&) const = default;
  bool operator==(const Arrow&) const = default;
};

std::ostream& operator<<(std::ostream& out, const Arrow& a);

/// Throws TailInBeta, HeadNotInBeta, or DimensionError.
Arrow make_arrow(const Staircase& beta, const ExponentVector& tail, const ExponentVector& head);

/// The variable i when the arrow's vector has exactly one negative
/// component, at index i; nullopt for non-standard arrows.
std::optional<std::size_t> standard_variable(const Arrow& a);
bool is_standard_for(const Arrow& a, std::size_t var);

/// Vector with component `var` deleted. Throws NotStandardFor.
std::vector<Exponent> offset(const Arrow& a, std::size_t var);

/// x_var-degree of the tail.
Exponent height(const Arrow& a, std::size_t var);

/// Arrows with the same tail whose heads run down the x_var-column of
/// a.head, ordered by increasing head x_var-degree.
std::vector<Arrow> shadow(const Arrow& a, std::size_t var);

/// A connected component of legal head positions for one vector.
struct ArrowClass {
  LatticeVector vector;
  std::vector<ExponentVector> heads;  // sorted; heads.front() is canonical
  bool zero = false;

  const ExponentVector& canonical_head() const { return heads.front(); }
  Arrow canonical() const;
  bool contains_head(const ExponentVector& h) const;

  /// Identity of the class among all classes of one staircase.
  std::pair<LatticeVector, ExponentVector> key() const { return {vector, canonical_head()}; }
};

/// True iff tail = head - vector lies in the orthant and outside beta.
bool is_legal_position(const Staircase& beta, const ExponentVector& head, const LatticeVector& vector);

/// True iff from this legal position a step down in some variable carries the
/// head out of the orthant while the tail stays outside beta.
bool exits_to_zero(const Staircase& beta, const ExponentVector& head, const LatticeVector& vector);

/// Breadth-first closure of `a` under legal unit translations.
ArrowClass translation_class(const Staircase& beta, const Arrow& a);

bool equivalent(const Staircase& beta, const Arrow& a, const Arrow& b);

/// Throws NotStandardFor unless `a` is x_var-standard.
bool can_advance(const Staircase& beta, const Arrow& a, std::size_t var);

/// Memoizing class lookup for one staircase. The first query for a vector
/// partitions every legal head of that vector into classes at once. Not
/// thread-safe; use one engine per thread.
class TranslationEngine {
public:
  explicit TranslationEngine(const Staircase& beta) : beta_(&beta) {}

  const Staircase& staircase() const noexcept { return *beta_; }

  const ArrowClass& class_of(const Arrow& a);
  bool equivalent(const Arrow& a, const Arrow& b);
  bool can_advance(const Arrow& a, std::size_t var);

private:
  struct Partition {
    std::vector<ArrowClass> classes;
    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> class_of_head;
  };

  const Partition& partition(const LatticeVector& vector);

  const Staircase* beta_;
  std::unordered_map<LatticeVector, std::unique_ptr<Partition>, LatticeVectorHash> partitions_;
};

} // namespace hilbsmooth

#endif
