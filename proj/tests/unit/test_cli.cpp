#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = crownlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("crownlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (path_ / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, Info) {
  const Result r = run({"info", "--n", "4", "--k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["alpha"], 21);
  EXPECT_EQ(j["inc_count"], 54);
}

TEST(Cli, CheckExampleCycle) {
  TempDir dir;
  const auto path = dir.file("cycle.json", R"({"n":3,"k":3,"pairs":[[1,1],[2,4],[5,5]]})");
  const Result r = run({"check", "--set", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["independent"], true);
  EXPECT_EQ(j["reversible"], false);
  EXPECT_EQ(j["strict_cycle_size"], 3);
  EXPECT_EQ(j["class"], "D3");
}

TEST(Cli, CheckReversibleSet) {
  TempDir dir;
  const auto path = dir.file("t.json");
  ASSERT_EQ(run({"canonical", "--n", "4", "--k", "5", "--sigma", "a8,a9,a7,a1,a6,a2", "--out",
                 path})
                .code,
            0);
  const Result r = run({"check", "--set", path});
  const json j = json::parse(r.out);
  EXPECT_EQ(j["reversible"], true);
  EXPECT_TRUE(j["strict_cycle_size"].is_null());
  EXPECT_TRUE(j["class"].is_null());
  EXPECT_EQ(j["maximal_reversible"], true);
  EXPECT_EQ(j["extension"].size(), 18u);
}

TEST(Cli, CanonicalForms) {
  const Result a = run({"canonical", "--n", "4", "--k", "5", "--base", "8", "--pattern", "TLTLT"});
  ASSERT_EQ(a.code, 0) << a.err;
  const json j = json::parse(a.out);
  EXPECT_EQ(j["size"], 21);
  EXPECT_EQ(j["sigma"]["indices"], json::parse("[8,9,7,1,6,2]"));
  const Result all = run({"canonical", "--n", "3", "--k", "2", "--all"});
  EXPECT_EQ(json::parse(all.out)["count"], 20);
  EXPECT_EQ(run({"canonical", "--n", "4", "--k", "5", "--sigma", "1,3"}).code, 2);
  EXPECT_EQ(run({"canonical", "--n", "4", "--k", "5"}).code, 2);
}

TEST(Cli, CanonicalRecover) {
  TempDir dir;
  const auto path = dir.file("t.json");
  run({"canonical", "--n", "4", "--k", "3", "--sigma", "2,1,3,7", "--out", path});
  const json j = json::parse(run({"canonical", "--set", path}).out);
  EXPECT_EQ(j["canonical"], true);
  EXPECT_EQ(j["sigma"]["indices"], json::parse("[2,1,3,7]"));
}

TEST(Cli, ExportedSetsRoundTrip) {
  TempDir dir;
  const auto path = dir.file("s.json");
  ASSERT_EQ(run({"extremal", "--n", "4", "--k", "3", "--family", "inr-high", "--out", path}).code,
            0);
  const auto again = dir.file("s2.json");
  ASSERT_EQ(run({"transform", "--set", path, "--op", "dfcl", "--i", "9", "--out", again}).code,
            0);
  std::ifstream a(path), b(again);
  const json ja = json::parse(a), jb = json::parse(b);
  // Position 9 wraps to 2 on a circle of 7; both files name the same crown.
  EXPECT_EQ(ja["n"], jb["n"]);
  EXPECT_EQ(jb["step"]["op"], "dfcl");
  EXPECT_EQ(jb["step"]["position"], 2);
  EXPECT_EQ(json::parse(run({"check", "--set", again}).out)["independent"], true);
}

TEST(Cli, Transform) {
  TempDir dir;
  const auto path = dir.file("s.json");
  run({"extremal", "--n", "3", "--k", "3", "--family", "inr-low", "--out", path});
  const Result r = run({"transform", "--set", path, "--op", "dlef", "--i", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["size_before"], 9);
  EXPECT_EQ(j["size_after"], 10);
  EXPECT_EQ(j["step"]["removed"], json::parse("[[5,5]]"));
  EXPECT_EQ(run({"transform", "--set", path, "--op", "swap", "--i", "2"}).code, 2);
}

TEST(Cli, ExtremalFamilies) {
  EXPECT_EQ(json::parse(run({"extremal", "--n", "3", "--k", "3", "--family", "inr-low"}).out)["size"],
            9);
  EXPECT_EQ(json::parse(run({"extremal", "--n", "4", "--k", "3", "--family", "inr-high"}).out)["size"],
            8);
  EXPECT_EQ(
      json::parse(run({"extremal", "--n", "3", "--k", "3", "--family", "noncanonical"}).out)["size"],
      8);
  const json dc0 = json::parse(
      run({"extremal", "--n", "47", "--k", "42", "--family", "dc0", "--sizes", "4,8,7,7,5,1,2"})
          .out);
  EXPECT_EQ(dc0["size"], 121);
  EXPECT_EQ(dc0["cycle"]["pairs"][1], json::parse("[13,20]"));
  const json s3 = json::parse(run({"extremal", "--n", "3", "--k", "3", "--family", "sac3"}).out);
  EXPECT_EQ(s3["class"], "D3");
  EXPECT_EQ(run({"extremal", "--n", "4", "--k", "3", "--family", "inr-low"}).code, 2);
  EXPECT_EQ(run({"extremal", "--n", "4", "--k", "3", "--family", "nope"}).code, 2);
}

TEST(Cli, Solvers) {
  const json a = json::parse(run({"alpha", "--n", "4", "--k", "3"}).out);
  EXPECT_EQ(a["value"], 10);
  EXPECT_EQ(a["witness"].size(), 10u);
  EXPECT_EQ(json::parse(run({"chi", "--n", "4", "--k", "1"}).out)["value"], 4);
  EXPECT_EQ(json::parse(run({"dim", "--n", "4", "--k", "2"}).out)["value"], 3);
  EXPECT_EQ(json::parse(run({"maxrev", "--n", "3", "--k", "1"}).out)["value"], 3);
  const json inr = json::parse(run({"maxinr", "--n", "4", "--k", "1"}).out);
  EXPECT_TRUE(inr["value"].is_null());
}

TEST(Cli, GraphExport) {
  const json j = json::parse(run({"graph", "--n", "3", "--k", "0"}).out);
  EXPECT_EQ(j["dimacs"], "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  TempDir dir;
  const auto path = dir.file("g.dimacs");
  ASSERT_EQ(run({"graph", "--n", "4", "--k", "2", "--out", path}).code, 0);
  std::ifstream side(path + ".json");
  EXPECT_EQ(json::parse(side)["vertices"].size(), 18u);
}

TEST(Cli, Hyperedges) {
  const json j = json::parse(run({"hyperedges", "--n", "3", "--k", "0", "--max-size", "2"}).out);
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["by_size"]["2"], 3);
}

TEST(Cli, VerifyAndSweep) {
  const Result v = run({"verify", "--n", "4", "--k", "3"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(json::parse(v.out)["all_pass"], true);

  const Result s = run({"sweep", "--n", "3..5", "--k", "0..3", "--verify"});
  ASSERT_EQ(s.code, 0) << s.err;
  std::istringstream lines(s.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,k,checks,passed,failed,skipped,all_pass");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "true") << line;
  }
  EXPECT_EQ(rows, 12);
}

TEST(Cli, SweepValues) {
  const Result s = run({"sweep", "--n", "3..4", "--k", "1", "--json"});
  ASSERT_EQ(s.code, 0) << s.err;
  const json j = json::parse(s.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["dim"], 4);
  EXPECT_EQ(j[1]["max_inr"], "none");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"info", "--n", "4", "--k", "5", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"info", "--n", "2", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"info", "--n", "x", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--set", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"dim", "--n", "8", "--k", "4"}).code, 3);
  EXPECT_EQ(run({"info", "--help"}).code, 0);
}

TEST(Cli, GuardOverrideAndEnvironment) {
  EXPECT_EQ(run({"maxrev", "--n", "7", "--k", "6"}).code, 3);
  EXPECT_EQ(run({"maxrev", "--n", "7", "--k", "6", "--guard-override"}).code, 0);
  ::setenv("CROWNLAB_GUARD_MAX_NK", "5", 1);
  const int code = run({"maxrev", "--n", "3", "--k", "3"}).code;
  ::unsetenv("CROWNLAB_GUARD_MAX_NK");
  EXPECT_EQ(code, 3);
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(crownlab::cli::parse_range("3..5"), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(crownlab::cli::parse_range("4"), (std::vector<int>{4}));
  EXPECT_EQ(crownlab::cli::parse_range("3,5"), (std::vector<int>{3, 5}));
}
