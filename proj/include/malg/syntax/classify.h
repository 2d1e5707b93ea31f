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

#ifndef MALG_SYNTAX_CLASSIFY_H_
#define MALG_SYNTAX_CLASSIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malg/syntax/formula.h"

namespace malg {

enum class ClassTag : std::uint8_t {
  kQF,
  kQFMACertified,
  kA,
  kE,
  kPreferred,
  kPPositiveCombination,
  kOther,
};

std::string_view ClassTagName(ClassTag tag);

// Set of tags; a formula usually carries several (QF, A, E, ...).
class ClassTags {
 public:
  void insert(ClassTag tag) { bits_ |= Bit(tag); }
  bool has(ClassTag tag) const { return (bits_ & Bit(tag)) != 0; }
  bool contains_all(const ClassTags& other) const { return (bits_ & other.bits_) == other.bits_; }
  std::vector<ClassTag> list() const;
  // The most specific tag present, in the order
  // QF-MA-certified, A, E, Preferred, P-positive-combination, QF, Other.
  ClassTag primary() const;

  friend bool operator==(const ClassTags&, const ClassTags&) = default;

 private:
  static std::uint32_t Bit(ClassTag t) { return 1u << static_cast<unsigned>(t); }
  std::uint32_t bits_ = 0;
};

// Quantifier-free formulas known to be mutually algebraic, usually because
// a certificate was measured for them. Kernels are matched up to an
// injective renaming of their free variables.
struct MaEvidence {
  std::vector<Formula> kernels;

  void Add(const Formula& kernel);
  void Merge(const MaEvidence& other);
};

// True when `target` is `pattern` with its free variables renamed
// injectively. Only quantifier-free patterns match.
bool MatchesUpToRenaming(const Formula& pattern, const Formula& target);

// Boolean combination of equalities between variables (True and False
// count as the empty combinations).
bool IsPartialEqualityDiagram(const Formula& f);

// Sound syntactic test that a quantifier-free formula is mutually algebraic
// in its free variables:
//   * at most one free variable, or False;
//   * a renaming of an evidence kernel;
//   * a conjunction whose mutually algebraic conjuncts are connected
//     through shared variables and mention every free variable (connected
//     conjunctions of mutually algebraic formulas are mutually algebraic,
//     and a formula entailing one over the same variables is too);
//   * a disjunction of mutually algebraic formulas over the same variables.
bool IsMaKnown(const Formula& f, const MaEvidence& evidence);

// exists x (R(x, y) & S(x, y, z)) with R quantifier-free and S a partial
// equality diagram; x, y, z pairwise disjoint and y nonempty. Mutual
// algebraicity of R is not checked here.
class PreferredFormula {
 public:
  // Throws Error(kShape) when an invariant fails.
  PreferredFormula(VarTuple x, VarTuple y, VarTuple z, Formula r, Formula s);

  const VarTuple& x() const { return x_; }
  const VarTuple& y() const { return y_; }
  const VarTuple& z() const { return z_; }
  const Formula& r() const { return r_; }
  const Formula& s() const { return s_; }

  // The formula E x.(R & S); S is omitted when it is True.
  Formula ToFormula() const;

 private:
  VarTuple x_, y_, z_;
  Formula r_, s_;
};

// Reads `f` as a single preferred formula: `f` is quantifier-free or a chain
// of existential blocks over a quantifier-free body, and its conjuncts split
// into an R part that `IsMaKnown` accepts and a partial equality diagram.
std::optional<PreferredFormula> AsPreferred(const Formula& f, const MaEvidence& evidence);

// The preferred formulas whose positive combination `f` is, after
// distributing existentials over disjunctions where needed; nullopt when
// `f` is not recognisably such a combination. True and False contribute no
// constituents.
std::optional<std::vector<PreferredFormula>> PreferredConstituents(const Formula& f,
                                                                   const MaEvidence& evidence);

ClassTags ClassifyAll(const Formula& f, const MaEvidence& evidence = {});
ClassTag Classify(const Formula& f, const MaEvidence& evidence = {});

}  // namespace malg

#endif  // MALG_SYNTAX_CLASSIFY_H_
