#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fbr_cli/app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fbr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fbr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

int data_rows(const std::string& tsv) {
  int rows = 0;
  std::istringstream in(tsv);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      header = false;
      continue;
    }
    if (!header) {
      header = true;
      continue;
    }
    ++rows;
  }
  return rows;
}

}  // namespace

TEST(Cli, BasisRows) {
  auto r = run({"basis", "--group", "C2", "--n", "2", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(data_rows(r.out), 3);
}

TEST(Cli, SpeciesTables) {
  auto r = run({"species", "--group", "C1", "--n", "1", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(data_rows(r.out), 1);
  EXPECT_NE(r.out.find("\t1\n"), std::string::npos);
  auto s3 = run({"species", "--group", "S3", "--n", "6", "--format", "tsv"});
  ASSERT_EQ(s3.code, 0);
  EXPECT_EQ(data_rows(s3.out), 7);
  std::istringstream in(s3.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 7);
}

TEST(Cli, Conductors) {
  auto c2 = run_json({"conductors", "--group", "C2", "--n", "2"});
  int tagged = 0;
  for (const auto& row : c2["conductors"]) {
    EXPECT_TRUE(row["match"].get<bool>());
    if (row["H"].size() == 2 && row["h"] == 1) {
      EXPECT_EQ(row["c"], 2);
      ++tagged;
    }
  }
  EXPECT_EQ(tagged, 1);
  auto s3 = run_json({"conductors", "--group", "S3", "--n", "1"});
  ASSERT_EQ(s3["conductors"].size(), 4u);
  for (const auto& row : s3["conductors"]) EXPECT_EQ(row["c"], row["rhs"]);
  auto q8 = run_json({"conductors", "--group", "Q8", "--n", "4"});
  for (const auto& row : q8["conductors"]) {
    EXPECT_TRUE(row["coprime_case"].get<bool>());
    EXPECT_EQ(row["c"], row["rhs"]);
  }
}

TEST(Cli, AllDivisorsMode) {
  auto r = run({"conductors", "--group", "C4", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=1"), std::string::npos);
  EXPECT_NE(r.out.find("n=2"), std::string::npos);
  EXPECT_NE(r.out.find("n=4"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run({"verify", "thm51", "--catalog-all"}).code, 0);
  EXPECT_EQ(run({"verify", "splitting", "--group", "C1", "--n", "1"}).code, 0);
  EXPECT_EQ(run({"verify", "boltje", "--group", "S3"}).code, 0);
  EXPECT_EQ(run({"verify", "lemmas", "--group", "D8"}).code, 0);
  auto nat = run({"verify", "naturality", "--f", "2,1,0", "--group", "C2"});
  EXPECT_EQ(nat.code, 0);
  EXPECT_NE(nat.out.find("def"), std::string::npos);
  EXPECT_NE(nat.out.find("defect (1)[{0},(0)]"), std::string::npos);
}

TEST(Cli, NormalizesFiberOrder) {
  auto r = run({"basis", "--group", "C4", "--n", "8", "--format", "tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(data_rows(r.out), 7);
}

TEST(Cli, ConfigurationErrors) {
  EXPECT_EQ(run({"basis", "--group", "Nope"}).code, 2);
  EXPECT_EQ(run({"basis", "--group", "C2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"basis", "--group", "C2", "--n", "zero"}).code, 2);
  EXPECT_EQ(run({"basis", "--group", "S4", "--cap", "10"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense", "--group", "C2"}).code, 2);
  EXPECT_EQ(run({"verify", "naturality", "--group", "C2", "--f", "2,4,1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, GroupFileAndOutput) {
  const std::string in = ::testing::TempDir() + "fbr_group.json";
  const std::string out = ::testing::TempDir() + "fbr_out.tsv";
  {
    std::ofstream f(in);
    f << R"j({"name": "S3p", "permutations": ["(1 2)", "(1 2 3)"]})j";
  }
  auto r = run({"basis", "--group", in, "--n", "6", "--format", "tsv", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(data_rows(ss.str()), 7);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST(Cli, Deterministic) {
  for (const auto& cmd : {"basis", "marks", "species", "idempotents", "conductors"}) {
    for (const auto& fmt : {"json", "tsv", "text"}) {
      auto a = run({cmd, "--group", "D8", "--format", fmt});
      auto b = run({cmd, "--group", "D8", "--format", fmt});
      ASSERT_EQ(a.code, 0);
      EXPECT_EQ(a.out, b.out) << cmd << " " << fmt;
    }
  }
}
