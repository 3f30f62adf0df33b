#ifndef HILBSMOOTH_TESTS_ORACLES_HPP
#define HILBSMOOTH_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hilbsmooth/arrow.hpp"
#include "hilbsmooth/staircase.hpp"

namespace oracle {

using hilbsmooth::Arrow;
using hilbsmooth::ExponentVector;
using hilbsmooth::Staircase;

/// Integer partitions of n via the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
std::uint64_t partition_count(std::size_t n);

/// Plane partitions of n from MacMahon's product prod_k (1 - q^k)^(-k).
std::uint64_t plane_partition_count(std::size_t n);

/// Division-closed n-subsets of the side^3 grid, counted by checking every
/// n-subset.
std::uint64_t grid_subset_staircase_count(std::size_t n, int side);

/// Members outside beta all of whose proper divisors lie in beta, found by
/// scanning the bounding box of the widths.
std::vector<ExponentVector> scan_minimal_generators(const Staircase& beta);

/// dim Hom(I, S/I) from a dense rational matrix built monomial by monomial:
/// for each generator pair and each head j, the product x^(L - m) x^j is
/// located in beta by membership testing.
std::size_t dense_tangent_dimension(const Staircase& beta);

/// Legal head positions reachable from a.head, computed as a fixed point of
/// repeated neighbour expansion (no queue).
std::set<ExponentVector> fixed_point_heads(const Staircase& beta, const Arrow& a);

/// A uniformly grown random staircase: starting from {0}, repeatedly add a
/// random addable monomial until the size reaches n.
Staircase random_staircase(std::mt19937& rng, std::size_t r, std::size_t n);

/// Named instances.
Staircase four_points();       // {1, x1, x2, x3}
Staircase compound_five();     // {1, x1, x2, x1x2, x3}
Staircase l_shape();           // {1, x1, x2, x2^2}
Staircase rigid_witness_fixture();  // three variables, n = 10
Staircase plane27();           // two variables, n = 27
Staircase four_variable_union();   // B(2,2,1,1) u B(1,1,2,2)

} // namespace oracle

#endif
