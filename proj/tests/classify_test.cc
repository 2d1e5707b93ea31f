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

#include "malg/error.h"
#include "malg/syntax/classify.h"
#include "malg/syntax/parser.h"

namespace malg {
namespace {

Signature Sig() {
  Signature s;
  s.AddRelation("E", 2).AddRelation("U", 1).AddRelation("T", 3).AddConstant("c");
  return s;
}

Formula P(const std::string& text) { return Parse(text, Sig()); }

MaEvidence EdgeEvidence() {
  MaEvidence ev;
  ev.Add(P("E(x,y)"));
  return ev;
}

TEST(ClassifyTest, EqualityIsQf) {
  EXPECT_EQ(Classify(P("x = y")), ClassTag::kQF);
  EXPECT_FALSE(ClassifyAll(P("x = y")).has(ClassTag::kPreferred));
}

TEST(ClassifyTest, CertifiedPreferred) {
  Formula f = P("E x . E(x,y) & x = z");
  EXPECT_EQ(Classify(f, EdgeEvidence()), ClassTag::kPreferred);
  EXPECT_TRUE(ClassifyAll(f, EdgeEvidence()).has(ClassTag::kPPositiveCombination));
  EXPECT_EQ(Classify(f), ClassTag::kOther);
}

TEST(ClassifyTest, PositiveCombination) {
  Formula t1 = P("E x . E(x,y) & x = z");
  Formula t2 = P("E u . E(u,z) & !(u = y)");
  Formula t3 = P("E(y,z)");
  Formula f = Formula::Or({t1, Formula::And({t2, t3})});
  EXPECT_EQ(Classify(f, EdgeEvidence()), ClassTag::kPPositiveCombination);
  EXPECT_EQ(Classify(Formula::Not(t1), EdgeEvidence()), ClassTag::kOther);
}

TEST(ClassifyTest, CertifiedKernel) {
  auto tags = ClassifyAll(P("E(u,v)"), EdgeEvidence());
  EXPECT_TRUE(tags.has(ClassTag::kQFMACertified));
  EXPECT_TRUE(tags.has(ClassTag::kA));
  EXPECT_TRUE(tags.has(ClassTag::kE));
  EXPECT_EQ(tags.primary(), ClassTag::kQFMACertified);
}

TEST(ClassifyTest, OneFreeVariableIsMa) {
  EXPECT_TRUE(IsMaKnown(P("U(x) | x = @c"), {}));
  EXPECT_TRUE(IsMaKnown(P("false"), {}));
  EXPECT_FALSE(IsMaKnown(P("U(x) & U(y)"), {}));
}

TEST(ClassifyTest, ConnectedConjunction) {
  MaEvidence ev = EdgeEvidence();
  EXPECT_TRUE(IsMaKnown(P("E(x,y) & E(y,z)"), ev));
  EXPECT_FALSE(IsMaKnown(P("E(x,y) & E(z,w)"), ev));
  EXPECT_TRUE(IsMaKnown(P("E(x,y) & !(x = y)"), ev));
  EXPECT_TRUE(IsMaKnown(P("E(x,y) | E(y,x)"), ev));
  EXPECT_FALSE(IsMaKnown(P("E(x,y) | U(x)"), ev));
}

TEST(ClassifyTest, RenamingMatch) {
  EXPECT_TRUE(MatchesUpToRenaming(P("E(x,y)"), P("E(a,b)")));
  EXPECT_FALSE(MatchesUpToRenaming(P("E(x,y)"), P("E(a,a)")));
  EXPECT_FALSE(MatchesUpToRenaming(P("E(x,y) & U(x)"), P("E(a,b) & U(b)")));
}

TEST(ClassifyTest, PartialEqualityDiagram) {
  EXPECT_TRUE(IsPartialEqualityDiagram(P("x = y & !(y = z) | true")));
  EXPECT_FALSE(IsPartialEqualityDiagram(P("x = @c")));
  EXPECT_FALSE(IsPartialEqualityDiagram(P("U(x)")));
}

TEST(ClassifyTest, AsPreferredSplitsParts) {
  auto p = AsPreferred(P("E x . E(x,y) & !(x = z)"), EdgeEvidence());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->x(), VarTuple({"x"}));
  EXPECT_EQ(p->r(), P("E(x,y)"));
  EXPECT_EQ(p->s(), P("!(x = z)"));
  EXPECT_EQ(p->ToFormula(), P("E x . E(x,y) & !(x = z)"));
}

TEST(ClassifyTest, ExistentialOverDisjunction) {
  Formula f = P("E x . (E(x,y) & x = z) | (E(x,z) & !(x = y))");
  EXPECT_TRUE(ClassifyAll(f, EdgeEvidence()).has(ClassTag::kPPositiveCombination));
  auto parts = PreferredConstituents(f, EdgeEvidence());
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->size(), 2u);
}

TEST(ClassifyTest, QuantifiedOther) {
  EXPECT_EQ(Classify(P("A x . E(x,y)"), EdgeEvidence()), ClassTag::kOther);
  EXPECT_EQ(Classify(P("E[=2] x . E(x,y)"), EdgeEvidence()), ClassTag::kOther);
}

TEST(ClassifyTest, PreferredShapeErrors) {
  EXPECT_THROW(PreferredFormula(VarTuple({"x"}), VarTuple({"x"}), {}, P("E(x,x)"), P("true")),
               Error);
  EXPECT_THROW(PreferredFormula(VarTuple({"x"}), VarTuple({"y"}), {}, P("E(x,y)"), P("U(x)")),
               Error);
}

}  // namespace
}  // namespace malg
