#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = toyscatter::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(CliSolve, DistinctSpeedsExample) {
  const auto r = invoke({"solve", "--a", "30,20", "--b", "15,36"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parsed(r);
  EXPECT_EQ(j["value"], "270/539");
  EXPECT_EQ(j["decimal"], "0.500927643785");
  EXPECT_EQ(j["method"], "distinct");
  EXPECT_EQ(j["residues"].size(), 2U);
  EXPECT_EQ(r.out.rfind("{\"value\":\"270/539\",\"decimal\":\"0.500927643785\",\"method\":\"distinct\"", 0), 0U);
}

TEST(CliSolve, RepeatedSpeedsUseSeries) {
  const auto r = invoke({"solve", "--a", "1,1,1", "--b", "1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parsed(r)["value"], "1/2");
  EXPECT_EQ(parsed(r)["method"], "series");
}

TEST(CliSolve, ExplicitMethods) {
  auto r = invoke({"solve", "--a", "1", "--b", "1,1", "--method", "recursive"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["value"], "1/4");
  EXPECT_EQ(parsed(r)["method"], "recursive");

  r = invoke({"solve", "--a", "1,1", "--b", "2,2", "--method", "closed-form"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parsed(r)["method"], "per-type-equal");

  r = invoke({"solve", "--a", "1,1,1", "--b", "1,1", "--method", "epsilon", "--epsilon", "1/1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parsed(r);
  EXPECT_EQ(j["method"], "epsilon");
  EXPECT_EQ(j["reference"], "11/16");
  EXPECT_EQ(j["epsilon"], "1/1000");
  EXPECT_LT(std::stod(j["error"].get<std::string>()), 1e-2);
}

TEST(CliSolve, PlainFormat) {
  const auto r = invoke({"solve", "--a", "2,1", "--b", "1", "--format", "plain"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 5/6\n"), std::string::npos);
}

TEST(CliSolve, InputFile) {
  const std::string path = ::testing::TempDir() + "toyscatter_instance.json";
  {
    std::ofstream f(path);
    f << R"({"a": ["30", 20], "b": [15, "36"]})";
  }
  const auto r = invoke({"solve", "--input", path});
  std::remove(path.c_str());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parsed(r)["value"], "270/539");
}

TEST(CliErrors, InvalidInputExitsTwo) {
  EXPECT_EQ(invoke({"solve", "--a", "0", "--b", "1"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--a", "-1", "--b", "1"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--a", "x", "--b", "1"}).code, 2);
  EXPECT_EQ(invoke({"solve"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--a", "1", "--b", "1", "--input", "f.json"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--input", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--a", "1,1", "--b", "1", "--method", "distinct"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--a", "1", "--b", "1", "--method", "magic"}).code, 2);
  EXPECT_EQ(invoke({"crosscheck", "--a", "5", "--b", ""}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--a", "5", "--b", "1", "--trials", "0"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(CliErrors, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("crosscheck"), std::string::npos);
}

TEST(CliCrosscheck, TwoOnTwoIsConsistent) {
  const auto r = invoke({"crosscheck", "--a", "30,20", "--b", "15,36", "--trials", "50000", "--samples", "100000"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  const auto j = parsed(r);
  EXPECT_TRUE(j["consistent"].get<bool>());
  ASSERT_EQ(j["methods"].size(), 5U);
  for (const auto& row : j["methods"]) EXPECT_TRUE(row["agrees"].get<bool>()) << row.dump();
}

TEST(CliCrosscheck, RepeatedSpeedsAreConsistent) {
  const auto r = invoke({"crosscheck", "--a", "1,1,2", "--b", "1,3", "--trials", "50000", "--samples", "100000",
                         "--format", "plain"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_NE(r.out.find("consistent yes"), std::string::npos);
  EXPECT_NE(r.out.find("series"), std::string::npos);
}

TEST(CliSimulate, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::string> base{"simulate", "--a", "30,20", "--b", "15,36", "--trials", "20000", "--seed", "5"};
  const auto first = invoke(base);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(invoke(base).out, first.out);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(invoke(threaded).out, first.out);
  const auto j = parsed(first);
  EXPECT_EQ(j["trials"], 20000);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["policy"], "frontmost");
}

TEST(CliSimulate, Permutations) {
  const auto r = invoke({"simulate", "--a", "2,1", "--b", "1", "--trials", "1000", "--permutations", "3",
                         "--policy", "random-adjacent"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parsed(r);
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[0]["policy"], "random-adjacent");
}

TEST(CliVolume, Deterministic) {
  const std::vector<std::string> args{"volume", "--a", "1", "--b", "1,1", "--samples", "10000", "--seed", "3"};
  const auto r = invoke(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(invoke(args).out, r.out);
  EXPECT_EQ(parsed(r)["samples"], 10000);
}

TEST(CliRelate, Verdicts) {
  auto r = invoke({"relate", "--a", "60", "--b", "20,30"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["verdict"], "matched");
  r = invoke({"relate", "--a", "20,30", "--b", "15,36"});
  EXPECT_EQ(parsed(r)["verdict"], "beats");
  EXPECT_EQ(invoke({"relate", "--a", "", "--b", "1"}).code, 2);
}

TEST(CliCurve, CsvAndJson) {
  auto r = invoke({"curve", "--points", "2", "--speed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("x,y\n1.00000000000,", 0), 0U);
  r = invoke({"curve", "--points", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)[0]["x"], "1/2");
  EXPECT_EQ(parsed(r)[0]["y"], "1/3");
  EXPECT_EQ(invoke({"curve", "--speed", "0"}).code, 2);
}

TEST(CliCycle, Witness) {
  const auto r = invoke({"cycle", "--p", "0.9,0.0526317", "--q", "1", "--r", "0.414213,0.414212"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(parsed(r)["cycle"].get<bool>());
  EXPECT_EQ(invoke({"cycle", "--p", "1"}).code, 2);
}

}  // namespace
