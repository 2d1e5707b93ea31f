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

#include <gtest/gtest.h>

#include "malg/algebraicity/closure.h"
#include "malg/algebraicity/ma_bound.h"
#include "malg/corpus/corpus.h"
#include "malg/error.h"
#include "malg/semantics/evaluator.h"
#include "malg/syntax/parser.h"
#include "testing/naive.h"

namespace malg {
namespace {

Formula P(const std::string& text) {
  Signature s;
  s.AddRelation("E", 2).AddRelation("S", 2).AddRelation("U", 1).AddRelation("B", 2);
  return Parse(text, s);
}

const VarTuple kXY({"x", "y"});

// Cycle edges E together with successor S on the same universe.
FiniteStructure CycleWithChain(Element n) {
  std::vector<std::vector<Element>> e, s;
  for (Element i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({(i + 1) % n, i});
    if (i + 1 < n) s.push_back({i, i + 1});
  }
  return FiniteStructure::Build(n, {{"E", {2, e}}, {"S", {2, s}}}, {}, "cc-" + std::to_string(n));
}

TEST(MaBoundTest, CyclesHaveBoundTwo) {
  for (Element n = 5; n <= 10; ++n) {
    auto m = GenerateStructure(FamilyKind::kUndirectedCycle, n);
    auto cert = MaBound(m, P("E(x,y)"), kXY);
    EXPECT_EQ(cert.bound, 2u);
    EXPECT_EQ(cert.bound, testing::NaiveMaBound(m, P("E(x,y)"), kXY));
    EXPECT_FALSE(cert.vacuous);
    EXPECT_EQ(cert.partitions.size(), 2u);
  }
}

TEST(MaBoundTest, ChainHasBoundOne) {
  auto m = GenerateStructure(FamilyKind::kSuccessorChain, 8);
  EXPECT_EQ(MaBound(m, P("S(x,y)"), kXY).bound, 1u);
}

TEST(MaBoundTest, OneVariableIsVacuous) {
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 6);
  auto cert = MaBound(m, P("E x . E(x,y)"), VarTuple({"y"}));
  EXPECT_TRUE(cert.vacuous);
  EXPECT_TRUE(cert.partitions.empty());
  EXPECT_EQ(cert.bound, 0u);
}

TEST(MaBoundTest, ExtraVariablesCount) {
  // z does not occur, so fixing x leaves every z free
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 6);
  EXPECT_EQ(MaBound(m, P("E(x,y)"), VarTuple({"x", "y", "z"})).bound, 12u);
}

TEST(MaBoundTest, FreeVariableMismatch) {
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 6);
  try {
    MaBound(m, P("E(x,y)"), VarTuple({"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFreeVariableMismatch);
  }
}

TEST(MaBoundTest, CertificateJson) {
  auto m = GenerateStructure(FamilyKind::kSuccessorChain, 4);
  std::string text = CertificateToJsonText(MaBound(m, P("S(x,y)"), kXY));
  EXPECT_NE(text.find("\"bound\": 1"), std::string::npos);
  EXPECT_NE(text.find("successor-chain-4"), std::string::npos);
}

TEST(FamilyStabilityTest, Verdicts) {
  auto cycles = Generate(RangeSpec(FamilyKind::kUndirectedCycle, 5, 10));
  auto r = FamilyStability(cycles, P("E(x,y)"), kXY);
  EXPECT_EQ(r.verdict, Verdict::kStable);
  EXPECT_EQ(r.VerdictText(), "stable(2)");
  EXPECT_EQ(r.bounds.size(), 6u);

  auto bip = Generate(RangeSpec(FamilyKind::kCompleteBipartite, 4, 12));
  auto g = FamilyStability(bip, P("E(x,y)"), kXY);
  EXPECT_EQ(g.VerdictText(), "growing");
  for (std::size_t i = 0; i < g.bounds.size(); ++i) EXPECT_EQ(g.bounds[i].second, bip[i].size() / 2);

  auto v = FamilyStability(cycles, P("E(y,y) | true"), VarTuple({"y"}));
  EXPECT_EQ(v.VerdictText(), "stable(0)");
  EXPECT_TRUE(v.vacuous);
}

TEST(FamilyStabilityTest, ShortFamilyIsInconclusive) {
  auto one = Generate(RangeSpec(FamilyKind::kUndirectedCycle, 5, 5));
  EXPECT_EQ(FamilyStability(one, P("E(x,y)"), kXY).verdict, Verdict::kInconclusive);
}

TEST(FamilyStabilityTest, CertifyKernelRejectsGrowth) {
  auto bip = Generate(RangeSpec(FamilyKind::kCompleteBipartite, 4, 12));
  MaEvidence ev;
  CertifyKernel(bip, P("E(x,y)"), ev);
  EXPECT_TRUE(ev.kernels.empty());
  auto cycles = Generate(RangeSpec(FamilyKind::kUndirectedCycle, 5, 10));
  CertifyKernel(cycles, P("E(x,y)"), ev);
  EXPECT_EQ(ev.kernels.size(), 1u);
  EXPECT_THROW(CertifyKernel(cycles, P("E x . E(x,y)"), ev), Error);
}

TEST(FamilyStabilityTest, MaxSolutionCount) {
  auto cycles = Generate(RangeSpec(FamilyKind::kUndirectedCycle, 5, 8));
  EXPECT_EQ(MaxSolutionCount(cycles, P("E(x,y)"), VarTuple({"x"})), 2u);
  EXPECT_EQ(MaxSolutionCount(cycles, P("E(x,y) & E(x,z)"), VarTuple({"x", "y"})), 4u);
}

TEST(ClosureTest, Permute) {
  auto r = ClosurePermute(P("E(x,y)"), kXY, VarTuple({"y", "x"}));
  EXPECT_EQ(r.formula, P("E(y,x)"));
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 4);
  EXPECT_EQ(MaBound(m, r.formula, r.vars).bound, MaBound(m, P("E(x,y)"), kXY).bound);
  EXPECT_THROW(ClosurePermute(P("E(x,y)"), kXY, VarTuple({"x", "z"})), Error);
}

TEST(ClosureTest, Specialize) {
  auto r = ClosureSpecialize(P("E(x,y)"), VarTuple({"x"}), VarTuple({"y"}), {Term::Literal(0)});
  EXPECT_EQ(r.formula, P("E(x,#0)"));
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 4);
  EXPECT_TRUE(MaBound(m, r.formula, r.vars).vacuous);
  EXPECT_THROW(ClosureSpecialize(P("E(x,y)"), VarTuple({"x"}), VarTuple({"y"}), {Term::Var("z")}),
               Error);
}

TEST(ClosureTest, Project) {
  auto r = ClosureProject(P("E(x,y) & E(y,z)"), VarTuple({"x", "z"}), VarTuple({"y"}));
  EXPECT_EQ(r.formula, P("E y . E(x,y) & E(y,z)"));
  EXPECT_EQ(r.vars, VarTuple({"x", "z"}));
}

TEST(ClosureTest, ConjoinOverlapping) {
  auto r = ClosureConjoin({{P("E(x,y)"), kXY}, {P("S(y,z)"), VarTuple({"y", "z"})}});
  EXPECT_EQ(r.vars.size(), 3u);
  for (Element n = 5; n <= 9; ++n) {
    auto m = CycleWithChain(n);
    auto cert = MaBound(m, r.formula, r.vars);
    EXPECT_EQ(cert.bound, testing::NaiveMaBound(m, r.formula, r.vars));
    EXPECT_LE(cert.bound, 2u);
  }
  EXPECT_THROW(ClosureConjoin({{P("E(x,y)"), kXY}, {P("S(z,w)"), VarTuple({"z", "w"})}}), Error);
}

TEST(ClosureTest, CountDegree) {
  auto r = ClosureCount(P("E(x,y)"), VarTuple({"x"}), VarTuple({"y"}), 2);
  for (Element n = 5; n <= 8; ++n) {
    auto m = GenerateStructure(FamilyKind::kUndirectedCycle, n);
    EXPECT_EQ(CountSolutions(m, r.formula, VarTuple({"y"})), n);
  }
}

}  // namespace
}  // namespace malg
