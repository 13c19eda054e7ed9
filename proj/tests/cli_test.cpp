#include "gqm/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gqm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::ordered_json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, Table1AtThree) {
  const auto doc = run_json({"table1", "--q", "3"});
  EXPECT_EQ(doc["tool"], "gqm");
  EXPECT_EQ(doc["command"], "table1");
  EXPECT_EQ(doc["inputs"]["q"], 3);
  ASSERT_EQ(doc["results"]["rows"].size(), 4u);
  const auto& row = doc["results"]["rows"][2];
  EXPECT_EQ(row["pp"], "1/3");
  EXPECT_EQ(row["mp"], "0/1");
  EXPECT_EQ(row["ev"], "1/3");
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Cli, Table1AtTwoMarksSkippedRow) {
  const auto doc = run_json({"table1", "--q", "2"});
  EXPECT_TRUE(doc["results"]["rows"][3]["skipped"].get<bool>());
}

TEST(Cli, ChshReportsWitness) {
  const auto doc = run_json({"chsh", "--q", "2"});
  EXPECT_EQ(doc["results"]["max_abs"], "2/1");
  EXPECT_TRUE(doc["results"]["witness"].contains("A"));
}

TEST(Cli, NonPrimePowerIsUsageError) {
  for (const std::string q : {"6", "1", "12"}) {
    const auto r = run({"field", "--q", q});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("q must be a prime power (q=1: use `fun`)"), std::string::npos);
  }
}

TEST(Cli, PAndNFlags) {
  EXPECT_EQ(run({"field", "--p", "3", "--n", "2"}).code, 0);
  EXPECT_EQ(run({"field", "--q", "9", "--p", "3"}).code, 0);
  EXPECT_EQ(run({"field", "--q", "9", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"field", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"field"}).code, 2);
  EXPECT_EQ(run({"field", "--q", "131072"}).code, 2);
}

TEST(Cli, UnknownSubcommandOrFlag) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"table1", "--q", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"table1", "--q", "4", "--format", "json"},
        std::vector<std::string>{"chsh", "--q", "3"}, std::vector<std::string>{"fun", "--n", "4"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, CsvOnlyForTables) {
  const auto r = run({"table1", "--q", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "observable,++,+-,-+,--,E.V.");
  EXPECT_EQ(run({"chsh", "--q", "3", "--format", "csv"}).code, 2);
}

TEST(Cli, RationalsAreStrings) {
  const auto doc = run_json({"probs", "--q", "3", "--r", "0", "--s", "1"});
  for (const auto& row : doc["results"]["rows"]) {
    EXPECT_TRUE(row["p_plus"].is_string());
    EXPECT_TRUE(row["ev"].is_string());
  }
}

TEST(Cli, CountsWithEnumerationCheck) {
  const auto doc = run_json({"counts", "--q", "2", "--N", "4", "--check"});
  EXPECT_EQ(doc["results"]["q_int"], "15");
  EXPECT_EQ(doc["checks"].size(), 5u);
  EXPECT_EQ(run({"counts", "--q", "1"}).code, 2);
}

TEST(Cli, StatesAndField) {
  const auto doc = run_json({"states", "--q", "3"});
  EXPECT_EQ(doc["results"]["points"].size(), 4u);
  EXPECT_EQ(doc["results"]["spin_model"].size(), 4u);
  const auto f = run_json({"field", "--q", "4"});
  EXPECT_EQ(f["results"]["modulus_poly"], "x^2+x+1");
  EXPECT_EQ(f["results"]["elements"][2]["poly"], "x");
}

TEST(Cli, FunReport) {
  const auto doc = run_json({"fun", "--n", "4"});
  EXPECT_EQ(doc["results"]["automorphism_group_order"], 24);
  EXPECT_EQ(doc["results"]["spin_model"]["superposition"], "AdditionForbidden");
  EXPECT_EQ(run({"fun", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"fun", "--n", "9"}).code, 2);
}

TEST(Cli, LhvFromFile) {
  const auto pr = write_temp("gqm_pr.json", R"({"m1":2,"m2":2,"pairs":{
    "0,0":{"pp":"1/2","pm":"0","mp":"0","mm":"1/2"},
    "0,1":{"pp":"1/2","pm":"0","mp":"0","mm":"1/2"},
    "1,0":{"pp":"1/2","pm":"0","mp":"0","mm":"1/2"},
    "1,1":{"pp":"0","pm":"1/2","mp":"1/2","mm":"0"}}})");
  const auto doc = run_json({"lhv", pr.string()});
  EXPECT_FALSE(doc["results"]["feasible"].get<bool>());
  EXPECT_TRUE(doc["pass"].get<bool>());

  const auto uniform = write_temp("gqm_uniform.json", R"({"m1":1,"m2":1,"pairs":{
    "0,0":{"pp":"1/4","pm":"1/4","mp":"1/4","mm":"1/4"}}})");
  EXPECT_TRUE(run_json({"lhv", uniform.string()})["results"]["feasible"].get<bool>());
}

TEST(Cli, LhvMalformedInput) {
  EXPECT_EQ(run({"lhv", "/nonexistent/table.json"}).code, 2);
  EXPECT_EQ(run({"lhv", write_temp("gqm_bad1.json", "{not json").string()}).code, 2);
  EXPECT_EQ(run({"lhv", write_temp("gqm_bad2.json", R"({"m1":1,"m2":1,"pairs":{}})").string()}).code, 2);
  EXPECT_EQ(run({"lhv", write_temp("gqm_bad3.json",
                                   R"({"m1":1,"m2":1,"pairs":{"0,0":{"pp":"1/2","pm":"1/4","mp":"0","mm":"0"}}})")
                            .string()})
                .code,
            2);
  EXPECT_EQ(run({"lhv", write_temp("gqm_bad4.json",
                                   R"({"m1":1,"m2":1,"pairs":{"0,0":{"pp":0.5,"pm":0.5,"mp":0,"mm":0}}})")
                            .string()})
                .code,
            2);
}

TEST(Cli, LhvFromGqm) {
  const auto doc = run_json({"lhv", "--from-gqm", "--q", "2"});
  EXPECT_FALSE(doc["results"]["feasible"].get<bool>());
  const auto prod = run_json({"lhv", "--from-gqm", "--q", "2", "--state", "product:0,2"});
  EXPECT_TRUE(prod["results"]["feasible"].get<bool>());
  EXPECT_EQ(run({"lhv", "--from-gqm", "--q", "2", "--state", "product:0,7"}).code, 2);
  EXPECT_EQ(run({"lhv", "--from-gqm", "--q", "2", "--state", "bell"}).code, 2);
}

TEST(Cli, VerifyAllPasses) {
  const auto r = run({"verify-all", "--q", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
