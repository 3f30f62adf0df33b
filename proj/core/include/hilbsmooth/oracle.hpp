#ifndef HILBSMOOTH_ORACLE_HPP
#define HILBSMOOTH_ORACLE_HPP

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hilbsmooth/staircase.hpp"

namespace hilbsmooth {

using Rational = boost::multiprecision::cpp_rational;

/// Linear conditions for phi in Hom(I, S/I) from the pairwise Taylor
/// syzygies of the minimal generators.
///
/// Unknown a*n + k is the coefficient of the k-th basis monomial (lex order)
/// in phi(m_a), m_a the a-th minimal generator (lex order). For generators
/// a < b with L = lcm(m_a, m_b), the row for basis monomial mu collects the
/// coefficient of x^mu in (L/m_a) phi(m_a) - (L/m_b) phi(m_b).
struct HomSystem {
  struct Entry {
    std::size_t col;
    int value;
  };
  struct Row {
    std::size_t gen_a;
    std::size_t gen_b;
    std::size_t basis_index;
    std::vector<Entry> entries;
  };

  std::size_t generator_count = 0;
  std::size_t basis_size = 0;
  std::vector<Row> rows;  // zero rows omitted

  std::size_t unknowns() const noexcept { return generator_count * basis_size; }
  std::size_t nonzeros() const noexcept;
};

HomSystem build_hom_system(const Staircase& beta);

/// Rank by fraction-free elimination over arbitrary-precision integers.
std::size_t exact_rank(const HomSystem& system);

/// dim Hom(I, S/I) = unknowns - rank.
std::size_t tangent_dimension(const Staircase& beta);

struct CrossCheck {
  std::size_t tangent = 0;
  std::size_t cotangent = 0;
  bool agree() const noexcept { return tangent == cotangent; }
};

CrossCheck cross_check(const Staircase& beta);

/// Sparse triplet text: a header line, a size line, then "row col value".
void write_triplets(const HomSystem& system, std::ostream& out);

using Point = std::vector<Rational>;

/// {(w1 a_{e_1}, ..., w1 a_{e_r}) : e in beta}, in member order. Throws
/// NonInjectiveSequence, ZeroParameter, or DimensionError when `a` is too
/// short.
std::vector<Point> distraction_points(const Staircase& beta, const std::vector<Rational>& a,
                                      const Rational& w1);

} // namespace hilbsmooth

#endif
