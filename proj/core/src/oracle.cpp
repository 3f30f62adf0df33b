#include "hilbsmooth/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hilbsmooth/cotangent.hpp"
#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

namespace {

using Integer = boost::multiprecision::cpp_int;
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column

void normalize(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) g = boost::multiprecision::gcd(g, v);
  if (g == 0) return;
  if (row.front().second < 0) g = -g;
  for (auto& [c, v] : row) v /= g;
}

// a * row - b * pivot, dropping zeros.
SparseRow combine(const Integer& a, const SparseRow& row, const Integer& b, const SparseRow& pivot) {
  SparseRow out;
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    Integer v;
    std::size_t col;
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      col = i->first;
      v = a * i->second;
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      col = j->first;
      v = -b * j->second;
      ++j;
    } else {
      col = i->first;
      v = a * i->second - b * j->second;
      ++i;
      ++j;
    }
    if (v != 0) out.emplace_back(col, std::move(v));
  }
  return out;
}

} // namespace

std::size_t HomSystem::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.entries.size();
  return total;
}

HomSystem build_hom_system(const Staircase& beta) {
  const auto& gens = beta.minimal_generators();
  const auto& members = beta.members();
  HomSystem sys;
  sys.generator_count = gens.size();
  sys.basis_size = members.size();

  std::map<ExponentVector, std::size_t> index;
  for (std::size_t k = 0; k < members.size(); ++k) index.emplace(members[k], k);

  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto L = lcm(gens[a], gens[b]);
      // mu = (L - m_a) + j, so j = mu - (L - m_a).
      const LatticeVector shift_a = gens[a].minus(L), shift_b = gens[b].minus(L);
      for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& mu = members[k];
        HomSystem::Row row{a, b, k, {}};
        if (auto j = mu.shifted(shift_a)) row.entries.push_back({a * members.size() + index.at(*j), +1});
        if (auto j = mu.shifted(shift_b)) row.entries.push_back({b * members.size() + index.at(*j), -1});
        if (!row.entries.empty()) sys.rows.push_back(std::move(row));
      }
    }
  return sys;
}

std::size_t exact_rank(const HomSystem& system) {
  std::set<std::vector<std::pair<std::size_t, int>>> distinct;
  for (const auto& row : system.rows) {
    std::vector<std::pair<std::size_t, int>> key;
    for (const auto& e : row.entries) key.emplace_back(e.col, e.value);
    std::sort(key.begin(), key.end());
    if (!key.empty() && key.front().second < 0)
      for (auto& [c, v] : key) v = -v;
    if (!key.empty()) distinct.insert(std::move(key));
  }

  std::map<std::size_t, SparseRow> pivots;  // leading column -> reduced row
  for (const auto& key : distinct) {
    SparseRow row;
    for (const auto& [c, v] : key) row.emplace_back(c, Integer(v));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const SparseRow& p = it->second;
      Integer a = p.front().second, b = row.front().second;
      row = combine(a, row, b, p);
      normalize(row);
    }
    if (!row.empty()) {
      normalize(row);
      pivots.emplace(row.front().first, std::move(row));
    }
  }
  return pivots.size();
}

std::size_t tangent_dimension(const Staircase& beta) {
  const auto sys = build_hom_system(beta);
  return sys.unknowns() - exact_rank(sys);
}

CrossCheck cross_check(const Staircase& beta) {
  return CrossCheck{tangent_dimension(beta), cotangent_dimension(beta)};
}

void write_triplets(const HomSystem& system, std::ostream& out) {
  out << "hom-system v1\n";
  out << "rows=" << system.rows.size() << " cols=" << system.unknowns() << " nnz=" << system.nonzeros()
      << "\n";
  for (std::size_t i = 0; i < system.rows.size(); ++i)
    for (const auto& e : system.rows[i].entries) out << i << ' ' << e.col << ' ' << e.value << '\n';
}

std::vector<Point> distraction_points(const Staircase& beta, const std::vector<Rational>& a,
                                      const Rational& w1) {
  if (w1 == 0) throw ZeroParameter("distraction parameter must be nonzero");
  const auto needed = static_cast<std::size_t>(beta.max_exponent()) + 1;
  if (a.size() < needed)
    throw DimensionError("distraction sequence needs " + std::to_string(needed) + " entries, got " +
                         std::to_string(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j])
        throw NonInjectiveSequence("sequence entries " + std::to_string(i) + " and " + std::to_string(j) +
                                   " coincide");
  std::vector<Point> points;
  points.reserve(beta.size());
  for (const auto& e : beta.members()) {
    Point p;
    for (std::size_t k = 0; k < beta.r(); ++k) p.push_back(w1 * a[static_cast<std::size_t>(e[k])]);
    points.push_back(std::move(p));
  }
  return points;
}

} // namespace hilbsmooth
