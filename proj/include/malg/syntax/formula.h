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

#ifndef MALG_SYNTAX_FORMULA_H_
#define MALG_SYNTAX_FORMULA_H_

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "malg/syntax/term.h"
#include "malg/syntax/var_tuple.h"

namespace malg {

enum class FormulaKind : std::uint8_t {
  kTrue,
  kFalse,
  kAtom,
  kEq,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kExists,
  kForall,
  kCount,
};

// Counting quantifier modes: at least r, at most r, exactly r.
enum class CountMode : std::uint8_t { kAtLeast, kAtMost, kExactly };

// Immutable first-order formula over a relational signature with equality.
// Values share structure and are cheap to copy; equality is structural.
//
// The factories keep a few normal-form invariants that the printer relies
// on for exact round trips:
//   * And/Or hold at least two children (empty And is True, empty Or is
//     False, a single child is returned as is);
//   * quantifier blocks are nonempty (an empty block returns its body, and
//     counting over the empty tuple is folded to its truth-table meaning).
class Formula {
 public:
  static Formula True();
  static Formula False();
  static Formula Atom(std::string relation, std::vector<Term> terms);
  static Formula Eq(Term lhs, Term rhs);
  static Formula Not(Formula f);
  static Formula And(std::vector<Formula> conjuncts);
  static Formula Or(std::vector<Formula> disjuncts);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula Exists(VarTuple vars, Formula body);
  static Formula Forall(VarTuple vars, Formula body);
  static Formula Count(CountMode mode, std::uint32_t r, VarTuple vars, Formula body);

  // Equality of two variables, the building block of partial equality
  // diagrams.
  static Formula VarEq(const std::string& a, const std::string& b);
  // Componentwise equality / inequality of equal-length variable tuples.
  static Formula TupleEq(const VarTuple& a, const VarTuple& b);
  static Formula TupleNeq(const VarTuple& a, const VarTuple& b);

  FormulaKind kind() const;
  bool is_quantifier() const;

  std::span<const Formula> children() const;
  const Formula& child(std::size_t i) const { return children()[i]; }
  // Body of a quantifier or operand of a negation.
  const Formula& body() const { return child(0); }

  const std::string& relation() const;
  std::span<const Term> terms() const;
  const VarTuple& bound() const;
  CountMode count_mode() const;
  std::uint32_t count() const;

  // Sorted, duplicate-free.
  const std::vector<std::string>& free_vars() const;
  bool has_free(const std::string& var) const;
  bool quantifier_free() const;
  // Every variable name occurring anywhere, free or bound.
  std::set<std::string> all_vars() const;
  std::size_t node_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);

  std::shared_ptr<const Node> node_;
};

// Flattens nested And nodes into a conjunct list (True yields no conjuncts).
std::vector<Formula> Conjuncts(const Formula& f);
// Flattens nested Or nodes into a disjunct list (False yields none).
std::vector<Formula> Disjuncts(const Formula& f);

}  // namespace malg

#endif  // MALG_SYNTAX_FORMULA_H_
