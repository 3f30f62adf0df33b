#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hilbsmooth/staircase.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("\"") + HILBSMOOTH_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(HILBSMOOTH_FIXTURES) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hilbsmooth_cli_" + name)).string();
}

} // namespace

TEST(Cli, AnalyzeExitCodes) {
  EXPECT_EQ(run("analyze " + fixture("compound_five.stc")).code, 0);
  EXPECT_EQ(run("analyze " + fixture("four_points.stc")).code, 1);
  EXPECT_EQ(run("analyze " + fixture("not_closed.stc")).code, 2);
  EXPECT_EQ(run("analyze /nonexistent.stc").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, AnalyzeJson) {
  auto r = run("analyze --format json " + fixture("four_points.stc"));
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cotangent"]["dim"], 18);
  EXPECT_EQ(j["oracle"]["agrees"], true);
  EXPECT_EQ(j["structure"]["rigid_nonstandard_witnesses"].size(), 3u);
}

TEST(Cli, AnalyzeText) {
  auto r = run("analyze --no-oracle --no-bunch " + fixture("l_shape.stc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("widths: (2,3)"), std::string::npos);
  EXPECT_EQ(r.out.find("oracle"), std::string::npos);
}

TEST(Cli, Census) {
  auto r = run("census -r 2 -n 6 --verify all --samples 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  auto j = nlohmann::json::parse(run("census -r 3 -n 4 --verify 3var --format json --jobs 2").out);
  EXPECT_EQ(j["rows"][3]["total"], 13);
  EXPECT_EQ(j["rows"][3]["singular"], 1);
  EXPECT_EQ(run("census -r 3 -n 4 --verify nonsense").code, 2);
}

TEST(Cli, MakeBoxAndUnion) {
  auto r = run("make box 2,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hilbsmooth::parse_staircase(r.out), hilbsmooth::box(hilbsmooth::BoxSpec({2, 2})));
  auto out = temp_path("union.stc");
  EXPECT_EQ(run("make -o " + out + " union 2,2,1,1 1,1,2,2").code, 0);
  EXPECT_EQ(hilbsmooth::read_staircase_file(out), oracle::four_variable_union());
  auto j = nlohmann::json::parse(run("analyze --format json " + out).out);
  EXPECT_EQ(j["cotangent"]["dim"], 28);
  EXPECT_EQ(j["structure"]["is_compound_box"], false);
  std::filesystem::remove(out);
  EXPECT_EQ(run("make box 2,0").code, 2);
}

TEST(Cli, MakeTruncateThickenAddbox) {
  auto r = run("make truncate " + fixture("plane27.stc") + " 1 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hilbsmooth::parse_staircase(r.out), hilbsmooth::truncate(oracle::plane27(), 0, 3));
  EXPECT_EQ(run("make truncate " + fixture("plane27.stc") + " 3 1").code, 2);
  r = run("make thicken " + fixture("l_shape.stc") + " 2");
  EXPECT_EQ(hilbsmooth::parse_staircase(r.out), hilbsmooth::thicken(oracle::l_shape(), 2));
  r = run("make addbox " + fixture("l_shape.stc") + " 1 1 1,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hilbsmooth::parse_staircase(r.out), hilbsmooth::add_box(oracle::l_shape(), 0, 1, {1, 3}));
  EXPECT_EQ(run("make addbox " + fixture("l_shape.stc") + " 1 1 1,2").code, 2);
}

TEST(Cli, Dump) {
  auto r = run("dump " + fixture("l_shape.stc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("hom-system v1\nrows=", 0), 0u);
}
