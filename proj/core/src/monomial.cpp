#include "hilbsmooth/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

namespace {

void check_nonnegative(const std::vector<Exponent>& e) {
  for (auto x : e)
    if (x < 0)
      throw DimensionError("negative exponent " + std::to_string(x));
}

void check_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
}

std::size_t hash_ints(const std::vector<int>& v) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> list) : e_(list) {
  check_nonnegative(e_);
}

ExponentVector::ExponentVector(std::vector<Exponent> exps) : e_(std::move(exps)) {
  check_nonnegative(e_);
}

ExponentVector ExponentVector::unit(std::size_t r, std::size_t var, Exponent power) {
  assert(var < r);
  ExponentVector v(r);
  v.e_[var] = power;
  return v;
}

Exponent ExponentVector::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), Exponent{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(e_.begin(), e_.end(), [](Exponent x) { return x > 0; }));
}

ExponentVector ExponentVector::with(std::size_t var, Exponent value) const {
  assert(var < e_.size() && value >= 0);
  ExponentVector v = *this;
  v.e_[var] = value;
  return v;
}

std::vector<Exponent> ExponentVector::without(std::size_t var) const {
  std::vector<Exponent> out;
  out.reserve(e_.size() - 1);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (i != var) out.push_back(e_[i]);
  return out;
}

ExponentVector ExponentVector::extended(Exponent value) const {
  ExponentVector v = *this;
  v.e_.push_back(value);
  return v;
}

LatticeVector ExponentVector::minus(const ExponentVector& other) const {
  check_same_length(*this, other);
  LatticeVector out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] - other.e_[i];
  return out;
}

std::optional<ExponentVector> ExponentVector::shifted(const LatticeVector& shift) const {
  if (shift.size() != e_.size())
    throw DimensionError("shift of length " + std::to_string(shift.size()));
  ExponentVector v = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    v.e_[i] += shift[i];
    if (v.e_[i] < 0) return std::nullopt;
  }
  return v;
}

std::string ExponentVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(e_[i]);
  }
  return out;
}

ExponentVector ExponentVector::parse(std::string_view text) {
  std::vector<Exponent> exps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && *ptr != ' '))
      throw DimensionError("malformed exponent vector '" + std::string(text) + "'");
    if (value < 0) throw DimensionError("negative exponent in '" + std::string(text) + "'");
    exps.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (exps.empty()) throw DimensionError("empty exponent vector");
  return ExponentVector(std::move(exps));
}

std::ostream& operator<<(std::ostream& out, const ExponentVector& v) {
  return out << to_tuple_string(v);
}

std::string to_tuple_string(const ExponentVector& v) {
  return to_tuple_string(LatticeVector(v.exponents().begin(), v.exponents().end()));
}

std::string to_tuple_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  check_same_length(a, b);
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

std::optional<ExponentVector> step(const ExponentVector& a, std::size_t var, Direction dir) {
  if (var >= a.size())
    throw DimensionError("variable index " + std::to_string(var) + " out of range");
  Exponent next = a[var] + static_cast<int>(dir);
  if (next < 0) return std::nullopt;
  return a.with(var, next);
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  return hash_ints(v.exponents());
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  return hash_ints(v);
}

} // namespace hilbsmooth
