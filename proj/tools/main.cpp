#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbsmooth/census.hpp"
#include "hilbsmooth/error.hpp"
#include "hilbsmooth/oracle.hpp"
#include "hilbsmooth/report.hpp"
#include "hilbsmooth/staircase.hpp"

namespace hs = hilbsmooth;

namespace {

constexpr int kExitSmooth = 0;
constexpr int kExitSingular = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hs::Error("cannot write '" + out_path + "'");
  out << text;
}

// Variable indices on the command line are 1-based.
std::size_t variable(int v, std::size_t r) {
  if (v < 1 || static_cast<std::size_t>(v) > r)
    throw hs::DimensionError("variable index " + std::to_string(v) + " outside 1.." + std::to_string(r));
  return static_cast<std::size_t>(v - 1);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothness of monomial points on Hilbert schemes of points"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hilbsmooth 0.1.0");

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze a staircase file (exit 0 smooth, 1 singular, 2 error)");
  std::string analyze_path;
  bool no_oracle = false, no_bunch = false;
  analyze->add_option("file", analyze_path, "Staircase file")->required();
  analyze->add_flag("--no-oracle", no_oracle, "Skip the linear-algebra cross-check");
  analyze->add_flag("--no-bunch", no_bunch, "Skip standard bunch construction");
  add_format(analyze);

  // census
  auto* census = app.add_subcommand("census", "Enumerate all staircases up to a size and verify theorems");
  hs::CensusOptions copts;
  std::string verify = "all";
  std::string counterexample_path;
  census->add_option("-r,--vars", copts.r, "Number of variables")->required()->check(CLI::Range(1, 8));
  census->add_option("-n,--n-max", copts.n_max, "Largest size")->required()->check(CLI::Range(1, 64));
  census->add_option("--verify", verify, "Comma-separated suites: all|oracle|2var|3var|boxes|thicken|truncate|addbox|union")
      ->capture_default_str();
  census->add_option("--jobs", copts.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  census->add_option("--seed", copts.seed, "Seed for sampled constructor suites")->capture_default_str();
  census->add_option("--samples", copts.random_samples, "Number of sampled constructor outputs")
      ->capture_default_str();
  census->add_option("--counterexample", counterexample_path, "Write the first counterexample to this file");
  add_format(census);

  // make
  auto* make = app.add_subcommand("make", "Write a staircase built by a constructor");
  make->require_subcommand(1);
  std::string out_path;
  make->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* make_box = make->add_subcommand("box", "Box with the given widths");
  std::string box_widths;
  make_box->add_option("widths", box_widths, "w1,...,wr")->required();

  auto* make_thicken = make->add_subcommand("thicken", "Thicken by a new last variable");
  std::string base_path;
  int thick_w = 1;
  make_thicken->add_option("file", base_path, "Base staircase file")->required();
  make_thicken->add_option("width", thick_w, "Width in the new variable")->required();

  auto* make_truncate = make->add_subcommand("truncate", "Truncate at a height");
  int var = 1, height = 1;
  make_truncate->add_option("file", base_path, "Staircase file")->required();
  make_truncate->add_option("var", var, "Variable (1-based)")->required();
  make_truncate->add_option("height", height, "Height")->required();

  auto* make_addbox = make->add_subcommand("addbox", "Add a box along a variable");
  std::string addbox_widths;
  make_addbox->add_option("file", base_path, "Staircase file")->required();
  make_addbox->add_option("var", var, "Variable (1-based)")->required();
  make_addbox->add_option("height", height, "Height")->required();
  make_addbox->add_option("widths", addbox_widths, "Box widths w1,...,wr (entry at var must equal height)")
      ->required();

  auto* make_union = make->add_subcommand("union", "Union of two boxes");
  std::string union_a, union_b;
  make_union->add_option("first", union_a, "w1,...,wr")->required();
  make_union->add_option("second", union_b, "w1,...,wr")->required();

  // dump
  auto* dump = app.add_subcommand("dump", "Print the linear constraint system as sparse triplets");
  std::string dump_path;
  dump->add_option("file", dump_path, "Staircase file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (analyze->parsed()) {
      const auto beta = hs::read_staircase_file(analyze_path);
      hs::AnalysisOptions opts;
      opts.oracle = !no_oracle;
      opts.bunch = !no_bunch;
      const auto rep = hs::analyze(beta, opts);
      std::cout << (format == "json" ? hs::to_json(rep) : hs::to_text(rep));
      if (rep.oracle && !rep.oracle->agree()) return kExitError;
      if (!rep.bunch_violations.empty()) return kExitError;
      return rep.cotangent.smooth ? kExitSmooth : kExitSingular;
    }
    if (census->parsed()) {
      copts.suites = hs::parse_suites(verify);
      const auto result = hs::run_census(copts);
      std::cout << (format == "json" ? hs::census_to_json(copts, result) : hs::census_to_text(copts, result));
      if (result.violation) {
        if (!counterexample_path.empty()) emit(result.violation->staircase_text, counterexample_path);
        return 1;
      }
      return 0;
    }
    if (make->parsed()) {
      std::optional<hs::Staircase> beta;
      if (make_box->parsed()) {
        beta = hs::box(hs::BoxSpec::parse(box_widths));
      } else if (make_thicken->parsed()) {
        beta = hs::thicken(hs::read_staircase_file(base_path), thick_w);
      } else if (make_truncate->parsed()) {
        auto base = hs::read_staircase_file(base_path);
        beta = hs::truncate(base, variable(var, base.r()), height);
      } else if (make_addbox->parsed()) {
        auto base = hs::read_staircase_file(base_path);
        auto widths = hs::BoxSpec::parse(addbox_widths).widths();
        beta = hs::add_box(base, variable(var, base.r()), height, widths);
      } else if (make_union->parsed()) {
        beta = hs::two_box_union(hs::BoxSpec::parse(union_a), hs::BoxSpec::parse(union_b));
      }
      emit(beta->to_file_text(), out_path);
      return 0;
    }
    if (dump->parsed()) {
      hs::write_triplets(hs::build_hom_system(hs::read_staircase_file(dump_path)), std::cout);
      return 0;
    }
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (make->parsed()) std::cerr << make->help();
    return kExitError;
  }
  return kExitError;
}
