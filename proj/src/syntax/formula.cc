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

#include "malg/syntax/formula.h"

#include <algorithm>

#include "malg/error.h"

namespace malg {

struct Formula::Node {
  FormulaKind kind = FormulaKind::kTrue;
  std::vector<Formula> children;
  std::string relation;
  std::vector<Term> terms;
  VarTuple bound;
  CountMode mode = CountMode::kAtLeast;
  std::uint32_t r = 0;

  std::vector<std::string> free;
  bool quantifier_free = true;
  std::size_t size = 1;
};

namespace {

void AddTermVars(const std::vector<Term>& terms, std::set<std::string>& out) {
  for (const auto& t : terms) {
    if (t.is_variable()) out.insert(t.name());
  }
}

}  // namespace

Formula Formula::Make(Node node) {
  std::set<std::string> free;
  AddTermVars(node.terms, free);
  for (const auto& c : node.children) {
    free.insert(c.free_vars().begin(), c.free_vars().end());
    node.quantifier_free = node.quantifier_free && c.quantifier_free();
    node.size += c.node_count();
  }
  if (node.kind == FormulaKind::kExists || node.kind == FormulaKind::kForall ||
      node.kind == FormulaKind::kCount) {
    node.quantifier_free = false;
    for (const auto& v : node.bound) free.erase(v);
  }
  node.free.assign(free.begin(), free.end());
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::True() {
  static const Formula kTrue = Make(Node{.kind = FormulaKind::kTrue});
  return kTrue;
}

Formula Formula::False() {
  static const Formula kFalse = Make(Node{.kind = FormulaKind::kFalse});
  return kFalse;
}

Formula Formula::Atom(std::string relation, std::vector<Term> terms) {
  if (relation.empty()) throw Error(ErrorCode::kInvalidArgument, "empty relation name");
  if (terms.empty()) {
    throw Error(ErrorCode::kArityMismatch, "relation '" + relation + "' applied to no terms");
  }
  return Make(Node{.kind = FormulaKind::kAtom, .relation = std::move(relation),
                   .terms = std::move(terms)});
}

Formula Formula::Eq(Term lhs, Term rhs) {
  return Make(Node{.kind = FormulaKind::kEq, .terms = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::Not(Formula f) {
  return Make(Node{.kind = FormulaKind::kNot, .children = {std::move(f)}});
}

Formula Formula::And(std::vector<Formula> conjuncts) {
  if (conjuncts.empty()) return True();
  if (conjuncts.size() == 1) return std::move(conjuncts.front());
  return Make(Node{.kind = FormulaKind::kAnd, .children = std::move(conjuncts)});
}

Formula Formula::Or(std::vector<Formula> disjuncts) {
  if (disjuncts.empty()) return False();
  if (disjuncts.size() == 1) return std::move(disjuncts.front());
  return Make(Node{.kind = FormulaKind::kOr, .children = std::move(disjuncts)});
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Make(Node{.kind = FormulaKind::kImplies, .children = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::Iff(Formula lhs, Formula rhs) {
  return Make(Node{.kind = FormulaKind::kIff, .children = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::Exists(VarTuple vars, Formula body) {
  if (vars.empty()) return body;
  return Make(Node{.kind = FormulaKind::kExists, .children = {std::move(body)},
                   .bound = std::move(vars)});
}

Formula Formula::Forall(VarTuple vars, Formula body) {
  if (vars.empty()) return body;
  return Make(Node{.kind = FormulaKind::kForall, .children = {std::move(body)},
                   .bound = std::move(vars)});
}

Formula Formula::Count(CountMode mode, std::uint32_t r, VarTuple vars, Formula body) {
  if (vars.empty()) {
    // The empty tuple has exactly one assignment, so the count is 0 or 1.
    switch (mode) {
      case CountMode::kAtLeast:
        return r == 0 ? True() : r == 1 ? body : False();
      case CountMode::kAtMost:
        return r >= 1 ? True() : Not(std::move(body));
      case CountMode::kExactly:
        return r == 0 ? Not(std::move(body)) : r == 1 ? body : False();
    }
  }
  return Make(Node{.kind = FormulaKind::kCount, .children = {std::move(body)},
                   .bound = std::move(vars), .mode = mode, .r = r});
}

Formula Formula::VarEq(const std::string& a, const std::string& b) {
  return Eq(Term::Var(a), Term::Var(b));
}

Formula Formula::TupleEq(const VarTuple& a, const VarTuple& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "tuple equality between tuples of different length");
  }
  std::vector<Formula> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) eqs.push_back(VarEq(a[i], b[i]));
  return And(std::move(eqs));
}

Formula Formula::TupleNeq(const VarTuple& a, const VarTuple& b) {
  return Not(TupleEq(a, b));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_quantifier() const {
  return node_->kind == FormulaKind::kExists || node_->kind == FormulaKind::kForall ||
         node_->kind == FormulaKind::kCount;
}

std::span<const Formula> Formula::children() const { return node_->children; }
const std::string& Formula::relation() const { return node_->relation; }
std::span<const Term> Formula::terms() const { return node_->terms; }
const VarTuple& Formula::bound() const { return node_->bound; }
CountMode Formula::count_mode() const { return node_->mode; }
std::uint32_t Formula::count() const { return node_->r; }
const std::vector<std::string>& Formula::free_vars() const { return node_->free; }

bool Formula::has_free(const std::string& var) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), var);
}

bool Formula::quantifier_free() const { return node_->quantifier_free; }
std::size_t Formula::node_count() const { return node_->size; }

std::set<std::string> Formula::all_vars() const {
  std::set<std::string> out;
  AddTermVars(node_->terms, out);
  out.insert(node_->bound.begin(), node_->bound.end());
  for (const auto& c : node_->children) {
    auto sub = c.all_vars();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.relation == y.relation && x.terms == y.terms &&
         x.bound == y.bound && x.mode == y.mode && x.r == y.r && x.children == y.children;
}

std::vector<Formula> Conjuncts(const Formula& f) {
  if (f.kind() == FormulaKind::kTrue) return {};
  if (f.kind() != FormulaKind::kAnd) return {f};
  std::vector<Formula> out;
  for (const auto& c : f.children()) {
    auto sub = Conjuncts(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<Formula> Disjuncts(const Formula& f) {
  if (f.kind() == FormulaKind::kFalse) return {};
  if (f.kind() != FormulaKind::kOr) return {f};
  std::vector<Formula> out;
  for (const auto& c : f.children()) {
    auto sub = Disjuncts(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace malg
