#include "hilbsmooth/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hilbsmooth/error.hpp"

namespace hilbsmooth {

// ---------------------------------------------------------------- BoxSpec

BoxSpec::BoxSpec(std::vector<Exponent> widths) : widths_(std::move(widths)) {
  if (widths_.empty()) throw DimensionError("box needs at least one width");
  for (auto w : widths_)
    if (w < 1) throw DimensionError("box width " + std::to_string(w) + " is not positive");
}

BoxSpec BoxSpec::parse(std::string_view text) {
  std::vector<Exponent> widths;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw DimensionError("malformed width list '" + std::string(text) + "'");
    widths.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return BoxSpec(std::move(widths));
}

// -------------------------------------------------------------- Staircase

Staircase::Staircase(std::vector<ExponentVector> sorted_members, std::size_t r)
  : r_(r), members_(std::move(sorted_members)) {
  lookup_.reserve(members_.size() * 2);
  lookup_.insert(members_.begin(), members_.end());

  widths_.assign(r_, 0);
  for (std::size_t i = 0; i < r_; ++i) {
    Exponent w = 0;
    while (contains(ExponentVector::unit(r_, i, w))) ++w;
    widths_[i] = w;
  }

  // Every generator other than 1 is b + e_i for some member b.
  std::unordered_set<ExponentVector, ExponentVectorHash> candidates;
  for (const auto& b : members_)
    for (std::size_t i = 0; i < r_; ++i) {
      auto m = b.with(i, b[i] + 1);
      if (!contains(m)) candidates.insert(std::move(m));
    }
  for (const auto& m : candidates) {
    bool minimal = true;
    for (std::size_t i = 0; i < r_ && minimal; ++i)
      if (m[i] > 0 && !contains(m.with(i, m[i] - 1))) minimal = false;
    if (minimal) gens_.push_back(m);
  }
  std::sort(gens_.begin(), gens_.end());
  gen_lookup_.insert(gens_.begin(), gens_.end());

  for (const auto& m : members_) {
    bool maximal = true;
    for (std::size_t i = 0; i < r_ && maximal; ++i)
      if (contains(m.with(i, m[i] + 1))) maximal = false;
    if (maximal) maximal_.push_back(m);
  }
}

Staircase Staircase::from_monomials(const std::vector<ExponentVector>& members, std::size_t r) {
  if (r == 0) throw DimensionError("staircase needs at least one variable");
  if (members.empty()) throw EmptyInput("a basis set is nonempty");
  for (const auto& m : members)
    if (m.size() != r)
      throw DimensionError("member " + to_tuple_string(m) + " does not have " +
                           std::to_string(r) + " components");

  std::vector<ExponentVector> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::unordered_set<ExponentVector, ExponentVectorHash> set(sorted.begin(), sorted.end());
  for (const auto& m : sorted)
    for (std::size_t i = 0; i < r; ++i)
      if (m[i] > 0) {
        auto below = m.with(i, m[i] - 1);
        if (!set.count(below))
          throw NotDivisionClosed("member " + to_tuple_string(m) + " present but its divisor " +
                                  to_tuple_string(below) + " is missing");
      }
  return Staircase(std::move(sorted), r);
}

Staircase Staircase::from_minimal_generators(const std::vector<ExponentVector>& gens,
                                             std::size_t r) {
  if (r == 0) throw DimensionError("staircase needs at least one variable");
  if (gens.empty()) throw InfiniteColength("no generators: the zero ideal has infinite colength");
  for (const auto& g : gens)
    if (g.size() != r)
      throw DimensionError("generator " + to_tuple_string(g) + " does not have " +
                           std::to_string(r) + " components");

  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      if (a != b && divides(gens[a], gens[b]))
        throw NotAntichain("generator " + to_tuple_string(gens[a]) + " divides " +
                           to_tuple_string(gens[b]));

  std::vector<Exponent> bound(r, -1);
  for (const auto& g : gens)
    if (g.support_size() == 1)
      for (std::size_t i = 0; i < r; ++i)
        if (g[i] > 0) bound[i] = g[i];
  for (std::size_t i = 0; i < r; ++i)
    if (bound[i] < 0)
      throw InfiniteColength("no pure power of x_" + std::to_string(i + 1) + " among generators");

  if (std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); }))
    throw EmptyInput("the unit ideal has an empty basis set");

  // Walk the bounding box in lexicographic order.
  std::vector<ExponentVector> members;
  std::vector<Exponent> cur(r, 0);
  while (true) {
    ExponentVector m(cur);
    if (std::none_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, m); }))
      members.push_back(m);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      if (i == 0) return Staircase(std::move(members), r);
    }
  }
}

bool Staircase::contains(const ExponentVector& m) const {
  return m.size() == r_ && lookup_.count(m) != 0;
}

ExponentVector Staircase::corner(std::size_t var) const {
  return ExponentVector::unit(r_, var, widths_.at(var));
}

bool Staircase::is_minimal_generator(const ExponentVector& m) const {
  return gen_lookup_.count(m) != 0;
}

bool Staircase::is_maximal(const ExponentVector& m) const {
  return std::binary_search(maximal_.begin(), maximal_.end(), m);
}

bool Staircase::is_box() const noexcept { return gens_.size() == r_; }

Exponent Staircase::max_exponent() const noexcept {
  return *std::max_element(widths_.begin(), widths_.end()) - 1;
}

std::string Staircase::to_file_text() const {
  std::string out = "staircase v1\n";
  out += "r=" + std::to_string(r_) + " n=" + std::to_string(members_.size()) + "\n";
  for (const auto& m : members_) out += m.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------- file io

Staircase parse_staircase(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  if (lines.empty() || lines[0] != "staircase v1")
    throw ParseError(1, "expected header 'staircase v1'");
  if (lines.size() < 2) throw ParseError(2, "missing 'r=<int> n=<int>' line");

  std::size_t r = 0, n = 0;
  {
    auto line = lines[1];
    auto read_field = [&](std::string_view key, std::size_t& from, std::size_t& value) {
      if (line.substr(from, key.size()) != key) return false;
      from += key.size();
      auto [ptr, ec] = std::from_chars(line.data() + from, line.data() + line.size(), value);
      if (ec != std::errc()) return false;
      from = static_cast<std::size_t>(ptr - line.data());
      return true;
    };
    std::size_t at = 0;
    bool ok = read_field("r=", at, r) && at < line.size() && line[at] == ' ';
    if (ok) {
      ++at;
      ok = read_field("n=", at, n) && at == line.size();
    }
    if (!ok || r == 0 || n == 0) throw ParseError(2, "expected 'r=<int> n=<int>' with positive values");
  }

  std::size_t last = lines.size();
  while (last > 2 && lines[last - 1].empty()) --last;
  if (last - 2 != n)
    throw ParseError(std::min(last, lines.size()) + (last - 2 < n ? 1 : 0),
                     "expected " + std::to_string(n) + " member lines, found " +
                         std::to_string(last - 2));

  std::vector<ExponentVector> members;
  members.reserve(n);
  for (std::size_t k = 2; k < last; ++k) {
    ExponentVector m;
    try {
      m = ExponentVector::parse(lines[k]);
    } catch (const DimensionError& e) {
      throw ParseError(k + 1, e.what());
    }
    if (m.size() != r)
      throw ParseError(k + 1, "member has " + std::to_string(m.size()) + " exponents, expected " +
                                  std::to_string(r));
    if (!members.empty()) {
      if (m == members.back()) throw ParseError(k + 1, "duplicated member");
      if (m < members.back()) throw ParseError(k + 1, "members are not sorted lexicographically");
    }
    members.push_back(std::move(m));
  }

  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto& m = members[k];
    for (std::size_t i = 0; i < r; ++i)
      if (m[i] > 0 && !std::binary_search(members.begin(), members.end(), m.with(i, m[i] - 1)))
        throw ParseError(k + 3, "not division-closed: divisor " +
                                    to_tuple_string(m.with(i, m[i] - 1)) + " of " +
                                    to_tuple_string(m) + " is missing");
  }
  return Staircase::from_monomials(members, r);
}

Staircase read_staircase_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_staircase(buf.str());
}

void write_staircase_file(const Staircase& beta, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << beta.to_file_text();
  if (!out) throw Error("write to '" + path + "' failed");
}

// ----------------------------------------------------------- constructors

Staircase box(const BoxSpec& spec) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < spec.size(); ++i)
    gens.push_back(ExponentVector::unit(spec.size(), i, spec[i]));
  return Staircase::from_minimal_generators(gens, spec.size());
}

Staircase thicken(const Staircase& base, Exponent w) {
  if (w < 1) throw DimensionError("thickening width must be positive");
  std::vector<ExponentVector> members;
  members.reserve(base.size() * static_cast<std::size_t>(w));
  for (const auto& m : base.members())
    for (Exponent s = 0; s < w; ++s) members.push_back(m.extended(s));
  return Staircase::from_monomials(members, base.r() + 1);
}

Staircase truncate(const Staircase& beta, std::size_t var, Exponent h) {
  if (var >= beta.r()) throw DimensionError("variable index out of range");
  if (h < 1) throw DimensionError("truncation height must be positive");
  std::vector<ExponentVector> members;
  for (const auto& m : beta.members())
    if (m[var] >= h) members.push_back(m.with(var, m[var] - h));
  if (members.empty())
    throw NothingAtHeight("no member has x_" + std::to_string(var + 1) + "-degree >= " +
                          std::to_string(h));
  return Staircase::from_monomials(members, beta.r());
}

Staircase add_box(const Staircase& beta, std::size_t var, Exponent h,
                  const std::vector<Exponent>& widths) {
  if (var >= beta.r()) throw DimensionError("variable index out of range");
  if (h < 1) throw DimensionError("box height must be positive");
  if (widths.size() != beta.r())
    throw DimensionError("box widths must have " + std::to_string(beta.r()) + " entries");
  if (widths[var] != h)
    throw DimensionError("box width along the addition direction must equal h");
  for (std::size_t k = 0; k < beta.r(); ++k)
    if (k != var && widths[k] < beta.width(k))
      throw WidthTooSmall("box width " + std::to_string(widths[k]) + " along x_" +
                          std::to_string(k + 1) + " is below the staircase width " +
                          std::to_string(beta.width(k)));

  std::vector<ExponentVector> members;
  for (const auto& m : beta.members()) members.push_back(m.with(var, m[var] + h));
  const Staircase slab = box(BoxSpec(widths));
  members.insert(members.end(), slab.members().begin(), slab.members().end());
  return Staircase::from_monomials(members, beta.r());
}

Staircase two_box_union(const BoxSpec& first, const BoxSpec& second) {
  if (first.size() != second.size()) throw DimensionError("boxes live in different dimensions");
  std::vector<ExponentVector> members = box(first).members();
  const auto more = box(second).members();
  members.insert(members.end(), more.begin(), more.end());
  return Staircase::from_monomials(members, first.size());
}

bool hypothesis81(const Staircase& beta, std::size_t var, Exponent h) {
  const Staircase t = truncate(beta, var, h);
  for (const auto& m : beta.minimal_generators()) {
    if (m[var] >= h) continue;
    for (std::size_t k = 0; k < beta.r(); ++k)
      if (k != var && m[k] > 0 && m[k] < t.width(k)) return false;
  }
  return true;
}

// ------------------------------------------------------------ enumeration

namespace {

struct Layered {
  std::vector<ExponentVector> members;
  std::unordered_set<ExponentVector, ExponentVectorHash> set;
};

// A staircase in r variables is a weakly decreasing chain of staircases in
// r-1 variables (its x_r-layers).
class ChainEnumerator {
public:
  ChainEnumerator(std::size_t r, std::size_t n, const std::function<bool(const Staircase&)>& visit)
    : r_(r), n_(n), visit_(visit), by_size_(n + 1) {
    for (std::size_t s = 1; s <= n; ++s)
      for (auto& lower : enumerate_staircases(r - 1, s)) {
        Layered l;
        l.members = lower.members();
        l.set.insert(l.members.begin(), l.members.end());
        by_size_[s].push_back(std::move(l));
      }
  }

  void run() { extend(nullptr, n_); }

private:
  bool extend(const Layered* prev, std::size_t remaining) {
    if (remaining == 0) return emit();
    std::size_t cap = prev ? std::min(prev->members.size(), remaining) : remaining;
    for (std::size_t s = 1; s <= cap; ++s)
      for (const auto& layer : by_size_[s]) {
        if (prev && !std::all_of(layer.members.begin(), layer.members.end(),
                                 [&](const auto& m) { return prev->set.count(m) != 0; }))
          continue;
        chain_.push_back(&layer);
        bool keep_going = extend(&layer, remaining - s);
        chain_.pop_back();
        if (!keep_going) return false;
      }
    return true;
  }

  bool emit() {
    std::vector<ExponentVector> members;
    members.reserve(n_);
    for (std::size_t level = 0; level < chain_.size(); ++level)
      for (const auto& m : chain_[level]->members)
        members.push_back(m.extended(static_cast<Exponent>(level)));
    return visit_(Staircase::from_monomials(members, r_));
  }

  std::size_t r_;
  std::size_t n_;
  const std::function<bool(const Staircase&)>& visit_;
  std::vector<std::vector<Layered>> by_size_;
  std::vector<const Layered*> chain_;
};

} // namespace

void for_each_staircase(std::size_t r, std::size_t n,
                        const std::function<bool(const Staircase&)>& visit) {
  if (r == 0) throw DimensionError("staircase needs at least one variable");
  if (n == 0) throw DimensionError("staircase size must be positive");
  if (r == 1) {
    std::vector<ExponentVector> chain;
    for (std::size_t k = 0; k < n; ++k) chain.push_back(ExponentVector{static_cast<Exponent>(k)});
    visit(Staircase::from_monomials(chain, 1));
    return;
  }
  ChainEnumerator(r, n, visit).run();
}

std::vector<Staircase> enumerate_staircases(std::size_t r, std::size_t n) {
  std::vector<Staircase> out;
  for_each_staircase(r, n, [&](const Staircase& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

} // namespace hilbsmooth
