// Copyright 2026 The malg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <gtest/gtest.h>
#include <sstream>

#include "json.hpp"
#include "malg/cli/cli.h"
#include "malg/corpus/corpus.h"
#include "malg/semantics/structure_io.h"

namespace malg {
namespace {

using nlohmann::json;

struct Run {
  int code;
  json report;
  std::string err;
};

Run Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::Dispatch(args, out, err);
  json report = json::parse(out.str(), nullptr, false);
  return {code, report, err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "malg_cli_test";
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, CheckMaStable) {
  auto r = Call({"check-ma", "--family", "cycle:5..10", "--formula", "E(x,y)", "--vars", "x y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["outputs"]["verdict"], "stable(2)");
  EXPECT_EQ(r.report["outputs"]["bounds"].size(), 6u);
}

TEST_F(CliTest, CheckMaGrowingFails) {
  auto r = Call({"check-ma", "--family", "bipartite:4..12", "--formula", "E(x,y)", "--vars", "x y"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["outputs"]["verdict"], "growing");
}

TEST_F(CliTest, RewriteExactCount) {
  auto r = Call({"rewrite", "exact-count", "--r", "2", "--formula", "E(x,y)", "--count-vars", "x",
                 "--family", "cycle:5..10", "--base", "strongly-minimal"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report["verdicts"].size(), 6u);
  for (const auto& v : r.report["verdicts"]) EXPECT_TRUE(v["equivalent"].get<bool>());
  auto tags = r.report["outputs"]["tags"];
  EXPECT_NE(std::find(tags.begin(), tags.end(), "P-positive-combination"), tags.end());
}

TEST_F(CliTest, EquivalenceWitness) {
  auto path = dir_ / "dcycle4.struct";
  StoreStructure(GenerateStructure(FamilyKind::kDirectedCycle, 4), path);
  auto r = Call({"equiv", "--formula-a", "E(x,y)", "--formula-b", "E(y,x)", "--structure",
                 path.string()});
  EXPECT_EQ(r.code, 1);
  ASSERT_EQ(r.report["verdicts"].size(), 1u);
  EXPECT_FALSE(r.report["verdicts"][0]["equivalent"].get<bool>());
  EXPECT_TRUE(r.report["verdicts"][0].contains("counterexample"));

  auto same = Call({"equiv", "--formula-a", "E(x,y)", "--formula-b", "E(x,y) & true",
                    "--structure", path.string()});
  EXPECT_EQ(same.code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({"frobnicate"}).code, 2);
  EXPECT_EQ(Call({}).code, 2);
  EXPECT_EQ(Call({"parse", "--formula", "E(x"}).code, 2);
  EXPECT_EQ(Call({"check-ma", "--family", "torus:1..3", "--formula", "E(x,y)"}).code, 2);
  EXPECT_EQ(Call({"equiv", "--formula-a", "x = y", "--formula-b", "x = y", "--structure",
                  (dir_ / "missing.struct").string()})
                .code,
            2);
}

TEST_F(CliTest, ParseAndClassify) {
  auto p = Call({"parse", "--formula", "E[=2] x . E(x,y)", "--rel", "E/2"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.report["outputs"]["formula"], "E[=2] x . E(x,y)");
  auto c = Call({"classify", "--formula", "E x . E(x,y) & x = z", "--rel", "E/2", "--certified",
                 "E(x,y)"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report["outputs"]["class"], "Preferred");
}

TEST_F(CliTest, CorpusWritesFiles) {
  auto r = Call({"corpus", "--family", "chain:3..5", "--out", dir_.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  for (int n = 3; n <= 5; ++n) {
    auto path = dir_ / ("successor-chain-" + std::to_string(n) + ".struct");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(LoadStructure(path), GenerateStructure(FamilyKind::kSuccessorChain, n));
  }
}

TEST_F(CliTest, BaseFailureExitsOne) {
  auto r = Call({"rewrite", "exact-count", "--r", "1", "--formula", "E(x,y)", "--count-vars", "x",
                 "--family", "cycle:5..10", "--base", "fail"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.report.contains("error"));
}

TEST_F(CliTest, Rank1) {
  auto r = Call({"rewrite", "rank1", "--family", "matching:8..16", "--formula",
                 "B(z,x) | B(x,z)", "--count-vars", "z", "--y", "x", "--r", "1", "--kernel",
                 "x = y;x y", "--kernel", "B(x,y);x y", "--kernel", "B(y,x);x y"});
  EXPECT_EQ(r.code, 0) << r.err << r.report.dump(1);
}

TEST_F(CliTest, HumanOutput) {
  std::ostringstream out, err;
  int code = cli::Dispatch({"--human", "parse", "--formula", "x = y"}, out, err);
  EXPECT_EQ(code, 0);
  EXPECT_TRUE(json::parse(out.str(), nullptr, false).is_discarded());
  EXPECT_NE(out.str().find("x = y"), std::string::npos);
}

}  // namespace
}  // namespace malg
