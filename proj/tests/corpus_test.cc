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

#include "malg/cli/family_arg.h"
#include "malg/corpus/corpus.h"
#include "malg/error.h"
#include "malg/semantics/structure_io.h"

namespace malg {
namespace {

using Tuples = std::vector<std::vector<Element>>;

TEST(CorpusTest, UndirectedCycle) {
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 4);
  const auto& e = m.relation("E")->tuples();
  EXPECT_EQ(e.size(), 8u);
  for (const auto& t : e) {
    std::vector<Element> rev{t[1], t[0]};
    EXPECT_TRUE(m.relation("E")->contains(rev));
  }
  EXPECT_EQ(m.id(), "undirected-cycle-4");
}

TEST(CorpusTest, DirectedCycle) {
  auto m = GenerateStructure(FamilyKind::kDirectedCycle, 3);
  EXPECT_EQ(m.relation("E")->tuples(), (Tuples{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(CorpusTest, Chain) {
  auto m = GenerateStructure(FamilyKind::kSuccessorChain, 3);
  EXPECT_EQ(m.relation("S")->tuples(), (Tuples{{0, 1}, {1, 2}}));
}

TEST(CorpusTest, Matching) {
  auto m = GenerateStructure(FamilyKind::kMatching, 6);
  EXPECT_EQ(m.relation("U")->tuples(), (Tuples{{0}, {1}, {2}}));
  EXPECT_EQ(m.relation("B")->tuples(), (Tuples{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(CorpusTest, PureSetAndBipartite) {
  auto p = GenerateStructure(FamilyKind::kPureSet, 5, {{"c", 2}});
  EXPECT_TRUE(p.relations().empty());
  EXPECT_EQ(p.constants().at("c"), 2u);
  auto k = GenerateStructure(FamilyKind::kCompleteBipartite, 6);
  EXPECT_EQ(k.relation("E")->tuples().size(), 18u);
}

TEST(CorpusTest, InvalidSpecs) {
  EXPECT_THROW(Generate({FamilyKind::kUndirectedCycle, {6, 5}, {}}), Error);
  EXPECT_THROW(Generate({FamilyKind::kUndirectedCycle, {5, 5}, {}}), Error);
  EXPECT_THROW(Generate({FamilyKind::kPureSet, {3, 6}, {{"c", 3}}}), Error);
  EXPECT_THROW(Generate({FamilyKind::kMatching, {7}, {}}), Error);
  EXPECT_THROW(Generate({FamilyKind::kUndirectedCycle, {}, {}}), Error);
}

TEST(CorpusTest, RangeSkipsOddForTwoColours) {
  auto spec = RangeSpec(FamilyKind::kMatching, 8, 13);
  EXPECT_EQ(spec.sizes, (std::vector<Element>{8, 10, 12}));
}

TEST(CorpusTest, KindNames) {
  for (auto kind : {FamilyKind::kDirectedCycle, FamilyKind::kUndirectedCycle,
                    FamilyKind::kSuccessorChain, FamilyKind::kPureSet, FamilyKind::kMatching,
                    FamilyKind::kCompleteBipartite}) {
    EXPECT_EQ(ParseFamilyKind(FamilyKindName(kind)), kind);
  }
  EXPECT_EQ(ParseFamilyKind("cycle"), FamilyKind::kUndirectedCycle);
  EXPECT_EQ(ParseFamilyKind("chain"), FamilyKind::kSuccessorChain);
  EXPECT_FALSE(ParseFamilyKind("torus").has_value());
}

TEST(CorpusTest, DeterministicStore) {
  auto a = Generate(RangeSpec(FamilyKind::kMatching, 4, 10));
  auto b = Generate(RangeSpec(FamilyKind::kMatching, 4, 10));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(StructureToJsonText(a[i]), StructureToJsonText(b[i]));
  }
}

TEST(CorpusTest, ChainRoundTripThroughFile) {
  auto m = GenerateStructure(FamilyKind::kSuccessorChain, 3);
  auto path = std::filesystem::temp_directory_path() / "malg_corpus_chain.struct";
  StoreStructure(m, path);
  EXPECT_EQ(LoadStructure(path), m);
  std::filesystem::remove(path);
}

TEST(FamilyArgTest, Forms) {
  auto r = cli::ParseFamilyArg("cycle:5..7");
  EXPECT_EQ(r.kind, FamilyKind::kUndirectedCycle);
  EXPECT_EQ(r.sizes, (std::vector<Element>{5, 6, 7}));
  auto l = cli::ParseFamilyArg("pureset:4,6,9", {"a=1"});
  EXPECT_EQ(l.sizes, (std::vector<Element>{4, 6, 9}));
  EXPECT_EQ(l.constants.at("a"), 1u);
  for (const char* bad : {"cycle", "cycle:", "cycle:5..", "torus:3..5", "cycle:a..b", "cycle:7..5"}) {
    EXPECT_THROW(cli::ParseFamilyArg(bad), Error) << bad;
  }
  EXPECT_THROW(cli::ParseFamilyArg("pureset:4..6", {"a"}), Error);
}

}  // namespace
}  // namespace malg
