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

#include "malg/syntax/transform.h"

#include <cctype>
#include <vector>

#include "malg/error.h"

namespace malg {

void FreshNames::Reserve(const Formula& f) {
  auto vars = f.all_vars();
  used_.insert(vars.begin(), vars.end());
}

std::string FreshNames::Fresh(const std::string& base) {
  std::string root = base;
  auto underscore = root.rfind('_');
  if (underscore != std::string::npos && underscore + 1 < root.size() && underscore > 0) {
    bool digits = true;
    for (std::size_t i = underscore + 1; i < root.size(); ++i) {
      digits = digits && std::isdigit(static_cast<unsigned char>(root[i]));
    }
    if (digits) root.resize(underscore);
  }
  unsigned& k = next_[root];
  for (;;) {
    std::string name = root + "_" + std::to_string(++k);
    if (used_.insert(name).second) return name;
  }
}

VarTuple FreshNames::FreshCopy(const VarTuple& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(Fresh(v));
  return VarTuple(std::move(out));
}

namespace {

Formula Rebuild(const Formula& f, std::vector<Formula> kids) {
  switch (f.kind()) {
    case FormulaKind::kNot: return Formula::Not(std::move(kids[0]));
    case FormulaKind::kAnd: return Formula::And(std::move(kids));
    case FormulaKind::kOr: return Formula::Or(std::move(kids));
    case FormulaKind::kImplies: return Formula::Implies(std::move(kids[0]), std::move(kids[1]));
    case FormulaKind::kIff: return Formula::Iff(std::move(kids[0]), std::move(kids[1]));
    case FormulaKind::kExists: return Formula::Exists(f.bound(), std::move(kids[0]));
    case FormulaKind::kForall: return Formula::Forall(f.bound(), std::move(kids[0]));
    case FormulaKind::kCount:
      return Formula::Count(f.count_mode(), f.count(), f.bound(), std::move(kids[0]));
    default: return f;
  }
}

Formula WithBound(const Formula& f, VarTuple bound, Formula body) {
  switch (f.kind()) {
    case FormulaKind::kExists: return Formula::Exists(std::move(bound), std::move(body));
    case FormulaKind::kForall: return Formula::Forall(std::move(bound), std::move(body));
    default: return Formula::Count(f.count_mode(), f.count(), std::move(bound), std::move(body));
  }
}

bool OccursBound(const Formula& f, const std::string& var) {
  if (f.is_quantifier() && f.bound().contains(var)) return true;
  for (const auto& c : f.children()) {
    if (OccursBound(c, var)) return true;
  }
  return false;
}

Formula SubstituteImpl(const Formula& f, const std::map<std::string, Term>& sigma) {
  if (sigma.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse: return f;
    case FormulaKind::kAtom:
    case FormulaKind::kEq: {
      std::vector<Term> terms(f.terms().begin(), f.terms().end());
      for (auto& t : terms) {
        if (!t.is_variable()) continue;
        if (auto it = sigma.find(t.name()); it != sigma.end()) t = it->second;
      }
      return f.kind() == FormulaKind::kEq ? Formula::Eq(terms[0], terms[1])
                                          : Formula::Atom(f.relation(), std::move(terms));
    }
    default: break;
  }
  if (f.is_quantifier()) {
    std::map<std::string, Term> inner;
    for (const auto& [k, v] : sigma) {
      if (!f.bound().contains(k)) inner.emplace(k, v);
    }
    return Rebuild(f, {SubstituteImpl(f.body(), inner)});
  }
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(SubstituteImpl(c, sigma));
  return Rebuild(f, std::move(kids));
}

Formula RenameImpl(const Formula& f, const std::map<std::string, std::string>& ren,
                   FreshNames& fresh) {
  if (ren.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse: return f;
    case FormulaKind::kAtom:
    case FormulaKind::kEq: {
      std::vector<Term> terms(f.terms().begin(), f.terms().end());
      for (auto& t : terms) {
        if (!t.is_variable()) continue;
        if (auto it = ren.find(t.name()); it != ren.end()) t = Term::Var(it->second);
      }
      return f.kind() == FormulaKind::kEq ? Formula::Eq(terms[0], terms[1])
                                          : Formula::Atom(f.relation(), std::move(terms));
    }
    default: break;
  }
  if (!f.is_quantifier()) {
    std::vector<Formula> kids;
    for (const auto& c : f.children()) kids.push_back(RenameImpl(c, ren, fresh));
    return Rebuild(f, std::move(kids));
  }
  // Drop renamings of variables this quantifier binds, and of variables
  // that do not occur free in the body.
  std::map<std::string, std::string> inner;
  for (const auto& [k, v] : ren) {
    if (!f.bound().contains(k) && f.body().has_free(k)) inner.emplace(k, v);
  }
  if (inner.empty()) return f;
  std::set<std::string> targets;
  for (const auto& [k, v] : inner) targets.insert(v);
  std::vector<std::string> bound;
  for (const auto& b : f.bound()) {
    if (targets.contains(b)) {
      std::string alt = fresh.Fresh(b);
      inner[b] = alt;
      bound.push_back(alt);
    } else {
      bound.push_back(b);
    }
  }
  return WithBound(f, VarTuple(std::move(bound)), RenameImpl(f.body(), inner, fresh));
}

Formula ExpandAtLeast(std::uint32_t r, const VarTuple& vars, const Formula& body,
                      FreshNames& fresh) {
  if (r == 0) return Formula::True();
  if (r == 1) return Formula::Exists(vars, body);
  std::vector<VarTuple> copies;
  std::vector<std::string> all;
  std::vector<Formula> conjuncts;
  for (std::uint32_t i = 0; i < r; ++i) {
    copies.push_back(fresh.FreshCopy(vars));
    all.insert(all.end(), copies.back().begin(), copies.back().end());
    conjuncts.push_back(Instantiate(body, vars, copies.back()));
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = i + 1; j < r; ++j) {
      conjuncts.push_back(Formula::TupleNeq(copies[i], copies[j]));
    }
  }
  return Formula::Exists(VarTuple(std::move(all)), Formula::And(std::move(conjuncts)));
}

Formula ExpandImpl(const Formula& f, FreshNames& fresh) {
  if (f.quantifier_free()) return f;
  if (f.kind() != FormulaKind::kCount) {
    std::vector<Formula> kids;
    for (const auto& c : f.children()) kids.push_back(ExpandImpl(c, fresh));
    return Rebuild(f, std::move(kids));
  }
  Formula body = ExpandImpl(f.body(), fresh);
  const std::uint32_t r = f.count();
  switch (f.count_mode()) {
    case CountMode::kAtLeast: return ExpandAtLeast(r, f.bound(), body, fresh);
    case CountMode::kAtMost:
      return Formula::Not(ExpandAtLeast(r + 1, f.bound(), body, fresh));
    case CountMode::kExactly:
      return Formula::And({ExpandAtLeast(r, f.bound(), body, fresh),
                           Formula::Not(ExpandAtLeast(r + 1, f.bound(), body, fresh))});
  }
  return f;
}

}  // namespace

Formula Substitute(const Formula& f, const std::map<std::string, Term>& sigma) {
  std::map<std::string, Term> live;
  for (const auto& [var, term] : sigma) {
    if (term.is_variable()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "substitution target for '" + var + "' must be a literal or constant");
    }
    if (f.has_free(var)) {
      live.emplace(var, term);
    } else if (OccursBound(f, var)) {
      throw Error(ErrorCode::kBoundVariable, "cannot substitute bound variable '" + var + "'");
    }
  }
  return SubstituteImpl(f, live);
}

Formula RenameFree(const Formula& f, const std::map<std::string, std::string>& renaming) {
  std::map<std::string, std::string> live;
  for (const auto& [from, to] : renaming) {
    if (from != to && f.has_free(from)) live.emplace(from, to);
  }
  if (live.empty()) return f;
  FreshNames fresh;
  fresh.Reserve(f);
  for (const auto& [from, to] : live) fresh.Reserve(to);
  return RenameImpl(f, live, fresh);
}

Formula Instantiate(const Formula& f, const VarTuple& from, const VarTuple& to) {
  if (from.size() != to.size()) {
    throw Error(ErrorCode::kInvalidArgument, "instantiation tuples differ in length");
  }
  std::map<std::string, std::string> ren;
  for (std::size_t i = 0; i < from.size(); ++i) ren.emplace(from[i], to[i]);
  return RenameFree(f, ren);
}

Formula ExpandCounting(const Formula& f) {
  FreshNames fresh;
  fresh.Reserve(f);
  return ExpandImpl(f, fresh);
}

}  // namespace malg
