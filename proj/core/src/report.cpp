#include "hilbsmooth/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace hilbsmooth {

namespace {

using nlohmann::json;

std::string tuple(const std::vector<Exponent>& v) { return to_tuple_string(LatticeVector(v.begin(), v.end())); }

json exps(const ExponentVector& v) { return json(v.exponents()); }

json arrow_json(const Arrow& a) { return json{{"tail", exps(a.tail)}, {"head", exps(a.head)}}; }

json decomposition_json(const CompoundDecomposition& d) {
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back(json{{"var", s.var + 1}, {"height", s.height}, {"widths", s.widths}});
  return json{{"base", d.base.widths()}, {"steps", steps}};
}

} // namespace

AnalysisReport analyze(const Staircase& beta, const AnalysisOptions& options) {
  TranslationEngine engine(beta);
  AnalysisReport rep{beta, class_report(engine), classify(engine), std::nullopt, {}, std::nullopt};
  if (options.bunch) {
    rep.bunch = build_bunch(engine);
    rep.bunch_violations = verify_bunch(beta, *rep.bunch);
  }
  if (options.oracle) rep.oracle = CrossCheck{tangent_dimension(beta), rep.cotangent.dim};
  return rep;
}

std::string to_text(const CompoundDecomposition& d) {
  std::ostringstream out;
  out << "base " << tuple(d.base.widths()) << "\n";
  for (const auto& s : d.steps)
    out << "add x" << s.var + 1 << " h=" << s.height << " widths=" << tuple(s.widths) << "\n";
  return out.str();
}

std::string to_text(const AnalysisReport& rep) {
  const auto& beta = rep.staircase;
  const auto& c = rep.cotangent;
  const auto& s = rep.structure;
  std::ostringstream out;
  out << "r=" << beta.r() << " n=" << beta.size() << "\n";
  out << "widths: " << tuple(beta.widths()) << "\n";
  out << "minimal generators (" << beta.minimal_generators().size() << "):";
  for (const auto& g : beta.minimal_generators()) out << " " << g;
  out << "\n";
  out << "maximal monomials (" << beta.maximal_monomials().size() << "):";
  for (const auto& m : beta.maximal_monomials()) out << " " << m;
  out << "\n";
  out << "cotangent dimension: " << c.dim << "\n";
  out << "rn: " << c.rn << "\n";
  out << "verdict: " << (c.smooth ? "smooth" : "singular") << "\n";
  out << "minimal arrows: " << c.minimal_arrow_count << " (" << c.zero_count << " in zero classes; "
      << c.nonstandard_count << " non-standard, " << c.nonstandard_zero_count << " of them zero; "
      << c.standard_zero_count << " standard zero)\n";
  out << "nonzero classes: " << c.classes.size() << "\n";
  for (const auto& cls : c.classes)
    out << "  " << cls.canonical() << "  [" << cls.heads.size() << " position"
        << (cls.heads.size() == 1 ? "" : "s") << "]\n";
  out << "rigid non-standard witnesses (" << s.rigid_nonstandard_witnesses.size() << "):";
  for (const auto& a : s.rigid_nonstandard_witnesses) out << "\n  " << a;
  out << "\n";
  out << "box: " << (s.is_box ? "yes" : "no") << "\n";
  out << "compound box: " << (s.is_compound_box ? "yes" : "no") << "\n";
  if (s.decomposition) {
    std::istringstream lines(to_text(*s.decomposition));
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  }
  if (s.g_pairs)
    for (const auto& [pair, gens] : *s.g_pairs) {
      out << "G(" << pair.first + 1 << "," << pair.second + 1 << "):";
      for (const auto& g : gens) out << " " << g;
      out << "\n";
    }
  if (rep.bunch) {
    out << "standard bunch (" << rep.bunch->size() << " arrows):\n" << render_bunch(*rep.bunch);
    out << "bunch check: " << (rep.bunch_violations.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& v : rep.bunch_violations) out << "  " << v << "\n";
  }
  if (rep.oracle)
    out << "oracle tangent dimension: " << rep.oracle->tangent << " ("
        << (rep.oracle->agree() ? "agrees" : "DISAGREES") << ")\n";
  return out.str();
}

std::string to_json(const AnalysisReport& rep) {
  const auto& beta = rep.staircase;
  const auto& c = rep.cotangent;
  const auto& s = rep.structure;

  json gens = json::array(), maxes = json::array(), classes = json::array(), witnesses = json::array();
  for (const auto& g : beta.minimal_generators()) gens.push_back(exps(g));
  for (const auto& m : beta.maximal_monomials()) maxes.push_back(exps(m));
  for (const auto& cls : c.classes) {
    json heads = json::array();
    for (const auto& h : cls.heads) heads.push_back(exps(h));
    classes.push_back(json{{"vector", cls.vector}, {"canonical", arrow_json(cls.canonical())}, {"heads", heads}});
  }
  for (const auto& a : s.rigid_nonstandard_witnesses) witnesses.push_back(arrow_json(a));

  json j;
  j["schema"] = kJsonSchemaVersion;
  j["r"] = beta.r();
  j["n"] = beta.size();
  j["widths"] = beta.widths();
  j["minimal_generators"] = gens;
  j["maximal_monomials"] = maxes;
  j["cotangent"] = json{{"dim", c.dim},
                        {"rn", c.rn},
                        {"smooth", c.smooth},
                        {"minimal_arrows", c.minimal_arrow_count},
                        {"zero_arrows", c.zero_count},
                        {"nonstandard_arrows", c.nonstandard_count},
                        {"nonstandard_zero_arrows", c.nonstandard_zero_count},
                        {"standard_zero_arrows", c.standard_zero_count},
                        {"classes", classes}};
  j["structure"] = json{{"rigid_nonstandard_witnesses", witnesses},
                        {"is_box", s.is_box},
                        {"is_compound_box", s.is_compound_box},
                        {"decomposition", s.decomposition ? decomposition_json(*s.decomposition) : json(nullptr)},
                        {"nonstandard_minimal_arrows_vanish", s.nonstandard_minimal_arrows_vanish}};
  if (s.g_pairs) {
    json g = json::object();
    for (const auto& [pair, set] : *s.g_pairs) {
      json list = json::array();
      for (const auto& m : set) list.push_back(exps(m));
      g[std::to_string(pair.first + 1) + "," + std::to_string(pair.second + 1)] = list;
    }
    j["structure"]["g_pairs"] = g;
  }
  if (rep.bunch) {
    json per = json::array();
    for (const auto& sub : rep.bunch->per_variable) {
      json list = json::array();
      for (const auto& a : sub) list.push_back(arrow_json(a));
      per.push_back(list);
    }
    j["bunch"] = json{{"per_variable", per}, {"violations", rep.bunch_violations}};
  }
  if (rep.oracle) j["oracle"] = json{{"tangent_dim", rep.oracle->tangent}, {"agrees", rep.oracle->agree()}};
  return j.dump(2) + "\n";
}

} // namespace hilbsmooth
