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

#include "malg/corpus/corpus.h"
#include "malg/error.h"
#include "malg/semantics/evaluator.h"
#include "malg/semantics/oracle.h"
#include "malg/semantics/structure_io.h"
#include "malg/syntax/parser.h"
#include "malg/syntax/transform.h"
#include "testing/naive.h"

namespace malg {
namespace {

FiniteStructure C4() { return GenerateStructure(FamilyKind::kUndirectedCycle, 4); }

Formula P(const std::string& text) {
  Signature s;
  s.AddRelation("E", 2).AddRelation("U", 1).AddConstant("c");
  return Parse(text, s);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(EvaluateTest, EdgesOnC4) {
  auto m = C4();
  EXPECT_TRUE(Evaluate(m, P("E(x,y)"), {{"x", 0}, {"y", 1}}));
  EXPECT_FALSE(Evaluate(m, P("E(x,y)"), {{"x", 0}, {"y", 2}}));
}

TEST(EvaluateTest, ExactCountOnC4) {
  auto m = C4();
  EXPECT_TRUE(Evaluate(m, P("E[=2] x . E(x,y)"), {{"y", 0}}));
  EXPECT_FALSE(Evaluate(m, P("E[=1] x . E(x,y)"), {{"y", 0}}));
  EXPECT_TRUE(Evaluate(m, P("E[<=2] x . E(x,y)"), {{"y", 3}}));
  EXPECT_TRUE(Evaluate(m, P("E[>=8] x y . E(x,y)"), {}));
  EXPECT_FALSE(Evaluate(m, P("E[>=9] x y . E(x,y)"), {}));
}

TEST(EvaluateTest, ExpandedCountAgrees) {
  auto m = C4();
  Formula f = P("E[=1] x . E(x,y)");
  Formula g = ExpandCounting(f);
  for (Element y = 0; y < 4; ++y) {
    EXPECT_EQ(Evaluate(m, f, {{"y", y}}), Evaluate(m, g, {{"y", y}}));
  }
  EXPECT_TRUE(EquivalentOn(m, P("E[=2] x . E(x,y)"), ExpandCounting(P("E[=2] x . E(x,y)"))));
}

TEST(EvaluateTest, Errors) {
  auto m = C4();
  EXPECT_EQ(CodeOf([&] { Evaluate(m, P("E(x,y)"), {{"x", 0}}); }), ErrorCode::kUnboundVariable);
  EXPECT_EQ(CodeOf([&] { Evaluate(m, P("U(x)"), {{"x", 0}}); }), ErrorCode::kUnknownSymbol);
  EXPECT_EQ(CodeOf([&] { Evaluate(m, P("x = @c"), {{"x", 0}}); }), ErrorCode::kUnknownSymbol);
  EXPECT_EQ(CodeOf([&] { Evaluate(m, P("E(x,x)"), {{"x", 7}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { Evaluate(m, P("x = #9"), {{"x", 0}}); }), ErrorCode::kInvalidArgument);
}

TEST(EvaluateTest, ExtraAssignmentsIgnored) {
  EXPECT_TRUE(Evaluate(C4(), P("E x . E(x,#0)"), {{"z", 3}}));
}

TEST(SolutionsTest, NeighboursOfZero) {
  auto s = Solutions(C4(), P("E(x,y)"), VarTuple({"x"}), {{"y", 0}});
  EXPECT_EQ(s.tuples, (std::vector<std::vector<Element>>{{1}, {3}}));
  EXPECT_TRUE(s.contains({3}));
  EXPECT_FALSE(s.contains({2}));
  EXPECT_EQ(CountSolutions(C4(), P("E(x,y)"), VarTuple({"x", "y"})), 8u);
}

TEST(SolutionsTest, NonFreeVariablesRangeFreely) {
  EXPECT_EQ(CountSolutions(C4(), P("x = x"), VarTuple({"x", "w"})), 16u);
  EXPECT_EQ(CountSolutions(C4(), P("E(x,x)"), VarTuple({"x", "w"})), 0u);
}

TEST(SolutionsTest, MissingAssignment) {
  EXPECT_EQ(CodeOf([&] { Solutions(C4(), P("E(x,y)"), VarTuple({"x"})); }),
            ErrorCode::kUnboundVariable);
}

TEST(EvaluatorTest, ReusableAcrossAssignments) {
  auto m = GenerateStructure(FamilyKind::kUndirectedCycle, 7);
  Formula f = P("E[=1] z . E(x,z) & E(z,y)");
  Evaluator ev(m, f, VarTuple({"x", "y"}));
  ForEachTuple(7, 2, [&](std::span<const Element> t) {
    Assignment a{{"x", t[0]}, {"y", t[1]}};
    EXPECT_EQ(ev(t), testing::NaiveEval(m, f, a));
    return true;
  });
}

TEST(ForEachTupleTest, Order) {
  std::vector<std::vector<Element>> seen;
  ForEachTuple(2, 2, [&](std::span<const Element> t) {
    seen.emplace_back(t.begin(), t.end());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<Element>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  int calls = 0;
  ForEachTuple(3, 0, [&](std::span<const Element>) { return ++calls, true; });
  EXPECT_EQ(calls, 1);
  ForEachTuple(3, 3, [&](std::span<const Element>) { return ++calls < 5; });
  EXPECT_EQ(calls, 5);
}

TEST(OracleTest, Examples) {
  auto m = C4();
  EXPECT_TRUE(EquivalentOn(m, P("E x . E(x,y)"), P("true | E(y,y)")));
  EXPECT_FALSE(EquivalentOn(m, P("E(x,y)"), P("E(y,x) & !(x = y) & false")));
}

TEST(OracleTest, CounterexampleWitnessesDifference) {
  auto m = C4();
  Formula a = P("E(x,y)");
  Formula b = P("E(x,y) & !(x = #0)");
  auto r = EquivalentOn(m, a, b);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.counterexample);
  EXPECT_NE(Evaluate(m, a, *r.counterexample), Evaluate(m, b, *r.counterexample));
  EXPECT_EQ(r.counterexample->at("x"), 0u);
  EXPECT_EQ(r.counterexample->at("y"), 1u);
}

TEST(OracleTest, FreeVariableMismatch) {
  EXPECT_EQ(CodeOf([&] { EquivalentOn(C4(), P("E(x,y)"), P("E(x,z)")); }),
            ErrorCode::kFreeVariableMismatch);
  EXPECT_TRUE(EquivalentOn(C4(), P("E(x,y) | true"), P("x = x"), VarTuple({"x", "y"})));
}

TEST(StructureTest, Validation) {
  EXPECT_EQ(CodeOf([] { FiniteStructure::Build(2, {{"E", {2, {{0, 2}}}}}); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { FiniteStructure::Build(2, {{"E", {2, {{0}}}}}); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { FiniteStructure::Build(2, {}, {{"c", 5}}); }), ErrorCode::kSchema);
}

TEST(StructureIoTest, RoundTrip) {
  auto m = GenerateStructure(FamilyKind::kPureSet, 5, {{"a", 1}});
  EXPECT_EQ(StructureFromJsonText(StructureToJsonText(m)), m);
  auto dir = std::filesystem::temp_directory_path() / "malg_semantics_test";
  std::filesystem::create_directories(dir);
  StoreStructure(m, dir / "s.struct");
  auto back = LoadStructure(dir / "s.struct");
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.id(), "s");
  std::filesystem::remove_all(dir);
}

TEST(StructureIoTest, Rejections) {
  EXPECT_EQ(CodeOf([] { StructureFromJsonText(R"({"universe": 2, "extra": 1})"); }),
            ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] {
              StructureFromJsonText(
                  R"({"universe": 2, "relations": {"E": {"arity": 1, "tuples": [[2]]}}})");
            }),
            ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { StructureFromJsonText("{not json"); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { LoadStructure("/nonexistent/dir/x.struct"); }), ErrorCode::kIo);
}

}  // namespace
}  // namespace malg
