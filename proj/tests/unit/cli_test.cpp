#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "pfsum_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pfsum");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = pfsum::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliVerify, SuiteSubset) {
  const auto r = run({"verify", "--suite", "zeta2-pfs", "--digits", "50", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& rec : j) {
    EXPECT_EQ(rec["status"], "Pass");
  }
}

TEST(CliVerify, SchemaFieldNames) {
  const auto r = run({"verify", "--suite", "lemniscatic-sum", "--format", "json"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) {
    keys.push_back(k);
  }
  const std::vector<std::string> expected{"identity_id",  "params",     "lhs",        "rhs",   "abs_residual",
                                          "rel_residual", "terms_used", "elapsed_ms", "status"};
  EXPECT_EQ(keys, expected);
  EXPECT_TRUE(j[0]["lhs"].is_string());
  EXPECT_EQ(j[0]["elapsed_ms"], 0);
}

TEST(CliVerify, UnknownIdentityAndBadFlags) {
  const auto r = run({"verify", "--suite", "nonexistent-id"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown identity"), std::string::npos);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--digits", "5"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliVerify, DeterministicJsonAndRoundTrip) {
  const std::vector<std::string> args{"verify", "--suite", "zeta2-pfs,example2-coeff,gamma-pfd-order1",
                                      "--seed", "7", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto parsed = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(parsed.dump(2) + "\n", a.out);
}

TEST(CliVerify, SeedChangesDraws) {
  const auto a = run({"verify", "--suite", "zeta2-pfs", "--seed", "1", "--format", "csv"});
  const auto b = run({"verify", "--suite", "zeta2-pfs", "--seed", "2", "--format", "csv"});
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 5);
}

TEST(CliVerify, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "pfsum_cli_test.json";
  const auto r = run({"verify", "--suite", "zeta3-apery", "--format", "json", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j[0]["identity_id"], "zeta3-apery");
  std::filesystem::remove(path);
}

TEST(CliVerify, DigitsFromEnvironment) {
  ::setenv("PFSUM_DIGITS", "30", 1);
  const auto r = run({"verify", "--suite", "lemniscatic-sum", "--format", "json"});
  ::unsetenv("PFSUM_DIGITS");
  const auto j = nlohmann::json::parse(r.out);
  // 30 significant digits in the decimal string.
  const std::string lhs = j[0]["lhs"];
  EXPECT_EQ(lhs.substr(0, lhs.find('e')).size(), 31u);
}

TEST(CliCompute, Examples) {
  auto r = run({"compute", "hurwitz-pfs", "--m", "3", "--a", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("value 1.2020569031595942", 0), 0u) << r.out;
  r = run({"compute", "beta", "--s", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("value 0.9689461462593693804", 0), 0u) << r.out;
  r = run({"compute", "pfs-coeff", "--spec", "hurwitz", "--a", "1", "--m", "2", "--J", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("value 1.0000000000", 0), 0u) << r.out;
  r = run({"compute", "taylor-coeff", "--spec", "finite", "--nodes", "1,2", "--m", "1", "--J", "2"});
  EXPECT_EQ(r.out.rfind("value 1.75", 0), 0u) << r.out;
  r = run({"compute", "zeta-ah", "--s", "2", "--format", "csv"});
  EXPECT_EQ(count_lines(r.out), 2);
  r = run({"compute", "pfs-coeff", "--spec", "interleaved", "--a", "0.25", "--b", "0.75", "--J", "1"});
  EXPECT_EQ(r.code, 0);
}

TEST(CliCompute, Errors) {
  EXPECT_EQ(run({"compute", "nope"}).code, 2);
  EXPECT_EQ(run({"compute", "hurwitz-direct", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"compute", "beta-h", "--s", "2.5"}).code, 2);
  EXPECT_EQ(run({"compute", "pfs-coeff", "--spec", "hurwitz", "--a", "-0.5", "--m", "2"}).code, 2);
}

TEST(CliTable, RowsAndRanges) {
  auto r = run({"table", "zeta-even-recursion", "--m", "1..5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 6);
  r = run({"table", "zetaAH", "--n", "1..4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(std::string(j[0]["lhs"]).substr(0, 14), "7.512855644747");
  r = run({"table", "betaH", "--n", "1..0", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,lhs,rhs,residual,status\n");
  EXPECT_EQ(run({"table", "betaH", "--n", "a..b"}).code, 2);
  EXPECT_EQ(run({"table", "betaH"}).code, 2);
  EXPECT_EQ(run({"table", "nope", "--n", "1..2"}).code, 2);
}

TEST(CliProbe, Cases) {
  auto r = run({"probe", "--L", "2", "--a", "1", "--samples", "8", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["samples"].size(), 8u);
  for (const auto& s : j["samples"]) {
    EXPECT_EQ(s["status"], "Converged");
    EXPECT_LT(std::stod(std::string(s["residual"])), 1e-20);
  }
  r = run({"probe", "--L", "3", "--a", "1", "--samples", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max_residual"), std::string::npos);
  r = run({"probe", "--L", "3", "--samples", "0", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z,lhs,rhs,residual,terms_used,status\n");
  EXPECT_EQ(run({"probe", "--L", "1"}).code, 2);
  EXPECT_EQ(run({"probe", "--L", "3", "--samples", "-1"}).code, 2);
}

}  // namespace
