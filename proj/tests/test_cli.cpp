#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arbor/cli/commands.hpp"
#include "arbor/error.hpp"

using nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  ordered_json json() const { return ordered_json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "arbor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = arbor::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kFixtures = ARBOR_TEST_FIXTURE_DIR;

}  // namespace

TEST(Analyze, PathInstance) {
  const auto r = run({"analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--orientation", "00"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["oriented"], ordered_json::parse(R"([["0","1"],["-1","-1"]])"));
  EXPECT_EQ(j["charpoly_oriented_text"], "x^2 + x + 1");
  EXPECT_EQ(j["det_oriented"], "1");
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const auto& [name, claim] : j["claims"].items()) EXPECT_EQ(claim["status"], "pass") << name;
  EXPECT_EQ(j["witness"]["Mf"], ordered_json::parse(R"([["1","0"],["0","1"]])"));
}

TEST(Analyze, DefaultsAndAlternateSyntax) {
  const auto a = run({"analyze", "--tree", "2", "--map", "(1 2 3)"});
  const auto b = run({"analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--orientation", "00"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = a.json(), jb = b.json();
  EXPECT_EQ(ja["oriented"], jb["oriented"]);
  const auto c = run({"analyze", "--tree", "1,1", "--map", "2,3,4,1", "--primes", "3,5", "--all-witnesses"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.json()["witnesses_checked"], "8");
}

TEST(Analyze, UsageErrorsExitTwo) {
  const auto bad_len = run({"analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--orientation", "000"});
  EXPECT_EQ(bad_len.code, 2);
  EXPECT_EQ(bad_len.json()["error"]["kind"], "DimensionMismatch");
  const auto fixed = run({"analyze", "--tree", "1-2,2-3", "--map", "1,3,2"});
  EXPECT_EQ(fixed.code, 2);
  EXPECT_EQ(fixed.json()["error"]["kind"], "NotSingleCycle");
  const auto parse = run({"analyze", "--tree", "1-2,2-x", "--map", "2,3,1"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.json()["error"]["message"].get<std::string>().find("column"), std::string::npos);
  EXPECT_EQ(run({"analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--primes", "4"}).code, 2);
  EXPECT_EQ(run({"analyze", "--map", "2,3,1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "12"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "12"}).json()["error"]["kind"], "CapExceeded");
  EXPECT_EQ(run({"verify", "--n", "5..2"}).code, 2);
}

TEST(ExitCodes, KindMapping) {
  using arbor::ErrorKind;
  EXPECT_EQ(arbor::cli::exit_code_for(ErrorKind::kWitnessFailed), 1);
  EXPECT_EQ(arbor::cli::exit_code_for(ErrorKind::kMismatchAgainstCaption), 1);
  EXPECT_EQ(arbor::cli::exit_code_for(ErrorKind::kParse), 2);
  EXPECT_EQ(arbor::cli::exit_code_for(ErrorKind::kFixtureMissing), 2);
}

TEST(Enumerate, Counts) {
  const auto r = run({"enumerate", "--n", "2..6"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  const char* expected[] = {"1", "2", "3", "6", "11"};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(j["per_n"][k]["tree_count"], expected[k]);
  EXPECT_EQ(j["per_n"][4]["cycles_per_tree"], "720");
}

TEST(Reproduce, CaptionsMatch) {
  const auto a = run({"reproduce", "--figure", "1a", "--fixtures", kFixtures});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.json()["figures"][0]["charpoly_unoriented_text"], "x^5 - 3x^4 + x^3 + x^2 - 3x + 1");
  const auto b = run({"reproduce", "--figure", "3b", "--fixtures", kFixtures});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(b.json()["figures"][0]["charpoly_unoriented_text"],
            "x^11 - x^10 - 7x^9 + 3x^8 + 11x^7 + 5x^6 + x^5 - 5x^4 - 5x^3 - 3x^2 + x + 1");
  const auto c = run({"reproduce", "--figure", "4", "--fixtures", kFixtures});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(c.json()["figures"][0]["product_identity"].get<bool>());
  EXPECT_EQ(c.json()["figures"][0]["charpoly_unoriented_text"], "x^5 - x^4 - 3x^3 - x^2 + 3x + 1");
  const auto all = run({"reproduce", "--fixtures", kFixtures});
  ASSERT_EQ(all.code, 0);
  EXPECT_EQ(all.json()["figures"].size(), 11u);
}

TEST(Reproduce, MissingAndMismatchedFixtures) {
  const auto missing = run({"reproduce", "--figure", "1a", "--fixtures", "/nonexistent"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.json()["error"]["kind"], "FixtureMissing");
  const auto dir = std::filesystem::temp_directory_path() / "arbor_cli_tampered";
  std::filesystem::create_directories(dir);
  {
    std::ifstream in(kFixtures + "/figure_1a.txt");
    std::stringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    const auto pos = s.find("unoriented_charpoly 1 -3");
    ASSERT_NE(pos, std::string::npos);
    s.replace(pos, 24, "unoriented_charpoly 1 -5");
    std::ofstream(dir / "figure_1a.txt") << s;
  }
  const auto bad = run({"reproduce", "--figure", "1a", "--fixtures", dir.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["figures"][0]["error"]["kind"], "MismatchAgainstCaption");
  EXPECT_FALSE(bad.json()["passed"].get<bool>());
  std::filesystem::remove_all(dir);
}

TEST(Verify, SmallSweepAndWorkerIndependence) {
  const auto one = run({"verify", "--n", "2..4", "--orientations", "all", "--workers", "1"});
  const auto many = run({"verify", "--n", "2..4", "--orientations", "all", "--workers", "8"});
  ASSERT_EQ(one.code, 0) << one.out;
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.json()["failure_count"], "0");
  EXPECT_NE(one.err.find("s wall clock"), std::string::npos);
  const auto s1 = run({"verify", "--n", "5", "--orientations", "sample:4", "--seed", "7", "--workers", "1"});
  const auto s8 = run({"verify", "--n", "5", "--orientations", "sample:4", "--seed", "7", "--workers", "8"});
  EXPECT_EQ(s1.out, s8.out);
  const auto timed = run({"verify", "--n", "2", "--timing"});
  EXPECT_TRUE(timed.json().contains("seconds"));
  EXPECT_FALSE(one.json().contains("seconds"));
}

TEST(Verify, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "arbor_cli_verify.json";
  const auto r = run({"verify", "--n", "2..3", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(ordered_json::parse(in)["command"], "verify");
  std::filesystem::remove(path);
}

TEST(SearchDetMf, HistogramAndDeterminism) {
  const auto r = run({"search-detmf", "--n", "2..5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["all_odd"].get<bool>());
  const auto p = run({"search-detmf", "--n", "2..6", "--path-only"});
  for (const auto& lv : p.json()["per_n"]) {
    ASSERT_EQ(lv["histogram"].size(), 1u);
    EXPECT_EQ(lv["histogram"][0]["abs_det"], "1");
  }
  const auto a = run({"search-detmf", "--n", "6", "--sample-budget", "50", "--seed", "7", "--workers", "1"});
  const auto b = run({"search-detmf", "--n", "6", "--sample-budget", "50", "--seed", "7", "--workers", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CapOverride, EnvironmentVariable) {
  ::setenv("ARBOR_CAP_N", "3", 1);
  EXPECT_EQ(run({"enumerate", "--n", "4"}).code, 2);
  ::setenv("ARBOR_CAP_N", "x", 1);
  EXPECT_EQ(run({"enumerate", "--n", "2"}).code, 2);
  ::unsetenv("ARBOR_CAP_N");
  EXPECT_EQ(run({"enumerate", "--n", "4"}).code, 0);
}
