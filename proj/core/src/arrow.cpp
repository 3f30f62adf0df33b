#include "hilbsmooth/arrow.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

namespace {

ExponentVector parse_tuple(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw DimensionError("malformed tuple '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<Exponent> exps;
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0)
      throw DimensionError("malformed tuple entry '" + std::string(field) + "'");
    exps.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ExponentVector(std::move(exps));
}

std::vector<ExponentVector> neighbours(const ExponentVector& h) {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (auto down = step(h, i, Direction::Down)) out.push_back(std::move(*down));
    out.push_back(h.with(i, h[i] + 1));
  }
  return out;
}

} // namespace

std::string Arrow::to_string() const {
  return to_tuple_string(tail) + " -> " + to_tuple_string(head);
}

Arrow Arrow::parse(std::string_view text) {
  auto sep = text.find("->");
  if (sep == std::string_view::npos) throw DimensionError("arrow text needs '->'");
  Arrow a{parse_tuple(text.substr(0, sep)), parse_tuple(text.substr(sep + 2))};
  if (a.tail.size() != a.head.size()) throw DimensionError("tail and head differ in length");
  return a;
}

std::ostream& operator<<(std::ostream& out, const Arrow& a) { return out << a.to_string(); }

Arrow make_arrow(const Staircase& beta, const ExponentVector& tail, const ExponentVector& head) {
  if (tail.size() != beta.r() || head.size() != beta.r())
    throw DimensionError("arrow endpoints must have " + std::to_string(beta.r()) + " components");
  if (beta.contains(tail)) throw TailInBeta("tail " + to_tuple_string(tail) + " lies in the staircase");
  if (!beta.contains(head))
    throw HeadNotInBeta("head " + to_tuple_string(head) + " lies outside the staircase");
  return Arrow{tail, head};
}

std::optional<std::size_t> standard_variable(const Arrow& a) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < a.tail.size(); ++i)
    if (a.head[i] < a.tail[i]) {
      if (found) return std::nullopt;
      found = i;
    }
  return found;
}

bool is_standard_for(const Arrow& a, std::size_t var) { return standard_variable(a) == var; }

std::vector<Exponent> offset(const Arrow& a, std::size_t var) {
  if (!is_standard_for(a, var))
    throw NotStandardFor(a.to_string() + " is not standard for x_" + std::to_string(var + 1));
  auto v = a.vector();
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(var));
  return v;
}

Exponent height(const Arrow& a, std::size_t var) {
  if (var >= a.tail.size()) throw DimensionError("variable index out of range");
  return a.tail[var];
}

std::vector<Arrow> shadow(const Arrow& a, std::size_t var) {
  if (var >= a.head.size()) throw DimensionError("variable index out of range");
  std::vector<Arrow> out;
  for (Exponent k = 0; k <= a.head[var]; ++k) out.push_back(Arrow{a.tail, a.head.with(var, k)});
  return out;
}

Arrow ArrowClass::canonical() const {
  const auto& h = canonical_head();
  LatticeVector neg(vector.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -vector[i];
  return Arrow{*h.shifted(neg), h};
}

bool ArrowClass::contains_head(const ExponentVector& h) const {
  return std::binary_search(heads.begin(), heads.end(), h);
}

bool is_legal_position(const Staircase& beta, const ExponentVector& head, const LatticeVector& vector) {
  if (!beta.contains(head)) return false;
  LatticeVector neg(vector.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -vector[i];
  auto tail = head.shifted(neg);
  return tail && !beta.contains(*tail);
}

bool exits_to_zero(const Staircase& beta, const ExponentVector& head, const LatticeVector& vector) {
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] != 0) continue;
    Exponent tail_i = head[i] - vector[i];
    if (tail_i < 1) continue;
    std::vector<Exponent> t(head.size());
    for (std::size_t k = 0; k < head.size(); ++k) t[k] = head[k] - vector[k];
    t[i] -= 1;
    if (!beta.contains(ExponentVector(std::move(t)))) return true;
  }
  return false;
}

ArrowClass translation_class(const Staircase& beta, const Arrow& a) {
  ArrowClass cls;
  cls.vector = a.vector();
  if (!is_legal_position(beta, a.head, cls.vector))
    throw Error("arrow " + a.to_string() + " is not valid for this staircase");

  std::unordered_set<ExponentVector, ExponentVectorHash> seen{a.head};
  std::deque<ExponentVector> queue{a.head};
  while (!queue.empty()) {
    auto h = std::move(queue.front());
    queue.pop_front();
    if (exits_to_zero(beta, h, cls.vector)) cls.zero = true;
    for (auto& next : neighbours(h))
      if (!seen.count(next) && is_legal_position(beta, next, cls.vector)) {
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    cls.heads.push_back(std::move(h));
  }
  std::sort(cls.heads.begin(), cls.heads.end());
  return cls;
}

bool equivalent(const Staircase& beta, const Arrow& a, const Arrow& b) {
  if (a.vector() != b.vector()) return false;
  return translation_class(beta, a).contains_head(b.head);
}

namespace {

bool advanceable(const ArrowClass& cls, const Arrow& a, std::size_t var) {
  if (!is_standard_for(a, var))
    throw NotStandardFor(a.to_string() + " is not standard for x_" + std::to_string(var + 1));
  if (cls.zero) return true;
  // tail_var = head_var - vector_var is smallest where head_var is smallest.
  Exponent h = a.tail[var];
  return std::any_of(cls.heads.begin(), cls.heads.end(),
                     [&](const auto& head) { return head[var] - cls.vector[var] < h; });
}

} // namespace

bool can_advance(const Staircase& beta, const Arrow& a, std::size_t var) {
  if (!is_standard_for(a, var))
    throw NotStandardFor(a.to_string() + " is not standard for x_" + std::to_string(var + 1));
  return advanceable(translation_class(beta, a), a, var);
}

const TranslationEngine::Partition& TranslationEngine::partition(const LatticeVector& vector) {
  auto it = partitions_.find(vector);
  if (it != partitions_.end()) return *it->second;

  auto part = std::make_unique<Partition>();
  // Members are sorted, so the first unvisited legal head of each component
  // is its canonical head.
  for (const auto& start : beta_->members()) {
    if (part->class_of_head.count(start) || !is_legal_position(*beta_, start, vector)) continue;
    std::size_t id = part->classes.size();
    ArrowClass cls;
    cls.vector = vector;
    std::deque<ExponentVector> queue{start};
    part->class_of_head.emplace(start, id);
    while (!queue.empty()) {
      auto h = std::move(queue.front());
      queue.pop_front();
      if (!cls.zero && exits_to_zero(*beta_, h, vector)) cls.zero = true;
      for (auto& next : neighbours(h))
        if (!part->class_of_head.count(next) && is_legal_position(*beta_, next, vector)) {
          part->class_of_head.emplace(next, id);
          queue.push_back(std::move(next));
        }
      cls.heads.push_back(std::move(h));
    }
    std::sort(cls.heads.begin(), cls.heads.end());
    part->classes.push_back(std::move(cls));
  }
  return *partitions_.emplace(vector, std::move(part)).first->second;
}

const ArrowClass& TranslationEngine::class_of(const Arrow& a) {
  const auto& part = partition(a.vector());
  auto it = part.class_of_head.find(a.head);
  if (it == part.class_of_head.end())
    throw Error("arrow " + a.to_string() + " is not valid for this staircase");
  return part.classes[it->second];
}

bool TranslationEngine::equivalent(const Arrow& a, const Arrow& b) {
  if (a.vector() != b.vector()) return false;
  return &class_of(a) == &class_of(b);
}

bool TranslationEngine::can_advance(const Arrow& a, std::size_t var) {
  return advanceable(class_of(a), a, var);
}

} // namespace hilbsmooth
