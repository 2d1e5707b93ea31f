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

#include "malg/syntax/classify.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "malg/error.h"
#include "malg/syntax/transform.h"

namespace malg {

std::string_view ClassTagName(ClassTag tag) {
  switch (tag) {
    case ClassTag::kQF: return "QF";
    case ClassTag::kQFMACertified: return "QF-MA-certified";
    case ClassTag::kA: return "A";
    case ClassTag::kE: return "E";
    case ClassTag::kPreferred: return "Preferred";
    case ClassTag::kPPositiveCombination: return "P-positive-combination";
    case ClassTag::kOther: return "Other";
  }
  return "?";
}

std::vector<ClassTag> ClassTags::list() const {
  std::vector<ClassTag> out;
  for (unsigned i = 0; i <= static_cast<unsigned>(ClassTag::kOther); ++i) {
    if (has(static_cast<ClassTag>(i))) out.push_back(static_cast<ClassTag>(i));
  }
  return out;
}

ClassTag ClassTags::primary() const {
  for (ClassTag t : {ClassTag::kQFMACertified, ClassTag::kA, ClassTag::kE, ClassTag::kPreferred,
                     ClassTag::kPPositiveCombination, ClassTag::kQF}) {
    if (has(t)) return t;
  }
  return ClassTag::kOther;
}

void MaEvidence::Add(const Formula& kernel) {
  if (std::find(kernels.begin(), kernels.end(), kernel) == kernels.end()) {
    kernels.push_back(kernel);
  }
}

void MaEvidence::Merge(const MaEvidence& other) {
  for (const auto& k : other.kernels) Add(k);
}

namespace {

bool MatchImpl(const Formula& p, const Formula& t, std::map<std::string, std::string>& fwd,
               std::map<std::string, std::string>& back) {
  if (p.kind() != t.kind() || p.children().size() != t.children().size() ||
      p.terms().size() != t.terms().size() || p.relation() != t.relation()) {
    return false;
  }
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    const Term& a = p.terms()[i];
    const Term& b = t.terms()[i];
    if (a.kind() != b.kind()) return false;
    if (!a.is_variable()) {
      if (a != b) return false;
      continue;
    }
    auto [f_it, f_new] = fwd.emplace(a.name(), b.name());
    if (!f_new && f_it->second != b.name()) return false;
    auto [b_it, b_new] = back.emplace(b.name(), a.name());
    if (!b_new && b_it->second != a.name()) return false;
  }
  for (std::size_t i = 0; i < p.children().size(); ++i) {
    if (!MatchImpl(p.child(i), t.child(i), fwd, back)) return false;
  }
  return true;
}

// Union-find connectivity of the variable hypergraph spanned by `units`.
bool Connected(const std::vector<const Formula*>& units) {
  std::map<std::string, std::string> parent;
  auto find = [&](std::string v) {
    while (parent.at(v) != v) v = parent.at(v);
    return v;
  };
  for (const auto* u : units) {
    for (const auto& v : u->free_vars()) parent.emplace(v, v);
  }
  for (const auto* u : units) {
    const auto& vars = u->free_vars();
    for (std::size_t i = 1; i < vars.size(); ++i) {
      auto a = find(vars[0]);
      auto b = find(vars[i]);
      if (a != b) parent[a] = b;
    }
  }
  std::set<std::string> roots;
  for (const auto& [v, p] : parent) roots.insert(find(v));
  return roots.size() <= 1;
}

std::set<std::string> VarsOf(const std::vector<const Formula*>& units) {
  std::set<std::string> out;
  for (const auto* u : units) out.insert(u->free_vars().begin(), u->free_vars().end());
  return out;
}

bool MatchesEvidence(const Formula& f, const MaEvidence& evidence) {
  for (const auto& k : evidence.kernels) {
    if (MatchesUpToRenaming(k, f)) return true;
  }
  return false;
}

// The conjunction of `units` is mutually algebraic in `vars` when its known
// mutually algebraic members are connected and cover `vars`.
bool ConjunctionMaKnown(const std::vector<const Formula*>& units,
                        const std::set<std::string>& vars, const MaEvidence& evidence) {
  std::vector<const Formula*> known;
  for (const auto* u : units) {
    if (u->free_vars().empty()) continue;
    if (IsMaKnown(*u, evidence)) known.push_back(u);
  }
  if (!Connected(known)) return false;
  auto covered = VarsOf(known);
  return std::includes(covered.begin(), covered.end(), vars.begin(), vars.end());
}

struct Branch {
  std::vector<std::string> bound;
  std::vector<Formula> units;
};

constexpr std::size_t kMaxBranches = 4096;

class BranchExpander {
 public:
  BranchExpander(const Formula& root, const MaEvidence& evidence, bool split_qf = false)
      : evidence_(evidence), split_qf_(split_qf) {
    fresh_.Reserve(root);
    taken_.insert(root.free_vars().begin(), root.free_vars().end());
  }

  std::optional<std::vector<Branch>> Expand(const Formula& f) {
    bool junction = f.kind() == FormulaKind::kAnd || f.kind() == FormulaKind::kOr;
    if (f.quantifier_free() && !(split_qf_ && junction && !MatchesEvidence(f, evidence_))) {
      std::vector<Formula> units;
      Flatten(f, units);
      return std::vector<Branch>{{{}, std::move(units)}};
    }
    switch (f.kind()) {
      case FormulaKind::kExists: {
        // Keep bound names unique across the whole expansion so branches
        // can be conjoined without capture.
        std::map<std::string, std::string> ren;
        std::vector<std::string> bound;
        for (const auto& v : f.bound()) {
          if (taken_.insert(v).second) {
            bound.push_back(v);
          } else {
            std::string alt = fresh_.Fresh(v);
            taken_.insert(alt);
            ren.emplace(v, alt);
            bound.push_back(alt);
          }
        }
        Formula body = ren.empty() ? f.body() : RenameFree(f.body(), ren);
        auto sub = Expand(body);
        if (!sub) return std::nullopt;
        for (auto& b : *sub) b.bound.insert(b.bound.begin(), bound.begin(), bound.end());
        return sub;
      }
      case FormulaKind::kAnd: {
        std::vector<Branch> acc{{}};
        for (const auto& c : f.children()) {
          auto sub = Expand(c);
          if (!sub) return std::nullopt;
          if (acc.size() * sub->size() > kMaxBranches) return std::nullopt;
          std::vector<Branch> next;
          for (const auto& a : acc) {
            for (const auto& b : *sub) {
              Branch m = a;
              m.bound.insert(m.bound.end(), b.bound.begin(), b.bound.end());
              m.units.insert(m.units.end(), b.units.begin(), b.units.end());
              next.push_back(std::move(m));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
      case FormulaKind::kOr: {
        std::vector<Branch> acc;
        for (const auto& c : f.children()) {
          auto sub = Expand(c);
          if (!sub) return std::nullopt;
          acc.insert(acc.end(), sub->begin(), sub->end());
          if (acc.size() > kMaxBranches) return std::nullopt;
        }
        return acc;
      }
      default:
        return std::nullopt;
    }
  }

 private:
  // Conjuncts of `f`, keeping whole any sub-conjunction that is an evidence
  // kernel.
  void Flatten(const Formula& f, std::vector<Formula>& out) const {
    if (f.kind() != FormulaKind::kAnd || MatchesEvidence(f, evidence_)) {
      if (f.kind() != FormulaKind::kTrue) out.push_back(f);
      return;
    }
    for (const auto& c : f.children()) Flatten(c, out);
  }

  const MaEvidence& evidence_;
  bool split_qf_;
  FreshNames fresh_;
  std::set<std::string> taken_;
};

std::optional<PreferredFormula> BranchToPreferred(const Branch& branch,
                                                  const MaEvidence& evidence) {
  std::set<std::string> used;
  for (const auto& u : branch.units) used.insert(u.free_vars().begin(), u.free_vars().end());
  // Vacuous bound variables are dropped: the universe is never empty.
  std::vector<std::string> x;
  for (const auto& v : branch.bound) {
    if (used.contains(v)) x.push_back(v);
  }

  std::vector<const Formula*> mandatory, candidates, equalities;
  for (const auto& u : branch.units) {
    if (!IsPartialEqualityDiagram(u)) {
      mandatory.push_back(&u);
    } else if (!u.free_vars().empty() && IsMaKnown(u, evidence)) {
      candidates.push_back(&u);
    } else {
      equalities.push_back(&u);
    }
  }

  auto try_split = [&](std::vector<const Formula*> r_units)
      -> std::optional<PreferredFormula> {
    // Grow the R part by every candidate equality touching its variables.
    std::set<const Formula*> in_r(r_units.begin(), r_units.end());
    std::set<std::string> vars;
    for (const auto* u : r_units) {
      if (IsMaKnown(*u, evidence)) vars.insert(u->free_vars().begin(), u->free_vars().end());
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto* c : candidates) {
        if (in_r.contains(c)) continue;
        bool touches = std::any_of(c->free_vars().begin(), c->free_vars().end(),
                                   [&](const std::string& v) { return vars.contains(v); });
        if (!touches) continue;
        in_r.insert(c);
        r_units.push_back(c);
        vars.insert(c->free_vars().begin(), c->free_vars().end());
        grew = true;
      }
    }
    auto r_vars = VarsOf(r_units);
    if (!ConjunctionMaKnown(r_units, r_vars, evidence)) return std::nullopt;
    for (const auto& v : x) {
      if (!r_vars.contains(v)) return std::nullopt;
    }
    std::vector<std::string> y;
    for (const auto& v : r_vars) {
      if (std::find(x.begin(), x.end(), v) == x.end()) y.push_back(v);
    }
    if (y.empty()) return std::nullopt;
    std::vector<Formula> r_parts, s_parts;
    std::set<std::string> s_vars;
    for (const auto& u : branch.units) {
      if (in_r.contains(&u)) {
        r_parts.push_back(u);
      } else {
        s_parts.push_back(u);
        s_vars.insert(u.free_vars().begin(), u.free_vars().end());
      }
    }
    std::vector<std::string> z;
    for (const auto& v : s_vars) {
      if (!r_vars.contains(v)) z.push_back(v);
    }
    return PreferredFormula(VarTuple(x), VarTuple(std::move(y)), VarTuple(std::move(z)),
                            Formula::And(std::move(r_parts)), Formula::And(std::move(s_parts)));
  };

  bool have_known_mandatory = std::any_of(mandatory.begin(), mandatory.end(), [&](const auto* u) {
    return !u->free_vars().empty() && IsMaKnown(*u, evidence);
  });
  if (have_known_mandatory) return try_split(mandatory);
  for (const auto* seed : candidates) {
    auto units = mandatory;
    units.push_back(seed);
    if (auto p = try_split(units)) return p;
  }
  return std::nullopt;
}

bool IsExistentialOverQf(const Formula& f) {
  const Formula* cur = &f;
  while (cur->kind() == FormulaKind::kExists) cur = &cur->body();
  return cur->quantifier_free();
}

bool IsPPositive(const Formula& f, const MaEvidence& evidence) {
  return PreferredConstituents(f, evidence).has_value();
}

}  // namespace

bool MatchesUpToRenaming(const Formula& pattern, const Formula& target) {
  if (!pattern.quantifier_free() || !target.quantifier_free()) return false;
  if (pattern.free_vars().size() != target.free_vars().size()) return false;
  std::map<std::string, std::string> fwd, back;
  return MatchImpl(pattern, target, fwd, back);
}

bool IsPartialEqualityDiagram(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse: return true;
    case FormulaKind::kEq: return f.terms()[0].is_variable() && f.terms()[1].is_variable();
    case FormulaKind::kNot:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
    case FormulaKind::kIff:
      return std::all_of(f.children().begin(), f.children().end(),
                         [](const Formula& c) { return IsPartialEqualityDiagram(c); });
    default: return false;
  }
}

bool IsMaKnown(const Formula& f, const MaEvidence& evidence) {
  if (!f.quantifier_free()) return false;
  if (f.free_vars().size() <= 1 || f.kind() == FormulaKind::kFalse) return true;
  if (MatchesEvidence(f, evidence)) return true;
  if (f.kind() == FormulaKind::kAnd) {
    std::vector<const Formula*> units;
    for (const auto& c : f.children()) units.push_back(&c);
    std::set<std::string> vars(f.free_vars().begin(), f.free_vars().end());
    return ConjunctionMaKnown(units, vars, evidence);
  }
  if (f.kind() == FormulaKind::kOr) {
    return std::all_of(f.children().begin(), f.children().end(), [&](const Formula& c) {
      return c.kind() == FormulaKind::kFalse ||
             (c.free_vars() == f.free_vars() && IsMaKnown(c, evidence));
    });
  }
  return false;
}

PreferredFormula::PreferredFormula(VarTuple x, VarTuple y, VarTuple z, Formula r, Formula s)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), r_(std::move(r)), s_(std::move(s)) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::kShape, "preferred formula: " + m); };
  if (y_.empty()) fail("y must be nonempty");
  for (const auto& v : x_) {
    if (y_.contains(v) || z_.contains(v)) fail("tuples overlap at '" + v + "'");
  }
  for (const auto& v : y_) {
    if (z_.contains(v)) fail("tuples overlap at '" + v + "'");
  }
  if (!r_.quantifier_free()) fail("R must be quantifier-free");
  for (const auto& v : r_.free_vars()) {
    if (!x_.contains(v) && !y_.contains(v)) fail("R mentions '" + v + "' outside x, y");
  }
  if (!IsPartialEqualityDiagram(s_)) fail("S must be a partial equality diagram");
  for (const auto& v : s_.free_vars()) {
    if (!x_.contains(v) && !y_.contains(v) && !z_.contains(v)) {
      fail("S mentions '" + v + "' outside x, y, z");
    }
  }
}

Formula PreferredFormula::ToFormula() const {
  Formula matrix = s_.kind() == FormulaKind::kTrue ? r_ : Formula::And({r_, s_});
  return Formula::Exists(x_, matrix);
}

std::optional<PreferredFormula> AsPreferred(const Formula& f, const MaEvidence& evidence) {
  if (!IsExistentialOverQf(f)) return std::nullopt;
  BranchExpander expander(f, evidence);
  auto branches = expander.Expand(f);
  if (!branches || branches->size() != 1) return std::nullopt;
  return BranchToPreferred(branches->front(), evidence);
}

std::optional<std::vector<PreferredFormula>> PreferredConstituents(const Formula& f,
                                                                   const MaEvidence& evidence) {
  if (f.kind() == FormulaKind::kTrue || f.kind() == FormulaKind::kFalse) {
    return std::vector<PreferredFormula>{};
  }
  if (auto p = AsPreferred(f, evidence)) return std::vector<PreferredFormula>{*p};
  if (f.kind() == FormulaKind::kAnd || f.kind() == FormulaKind::kOr) {
    std::vector<PreferredFormula> out;
    bool ok = true;
    for (const auto& c : f.children()) {
      auto sub = PreferredConstituents(c, evidence);
      if (!sub) {
        ok = false;
        break;
      }
      out.insert(out.end(), sub->begin(), sub->end());
    }
    if (ok) return out;
  }
  // Distribute existentials and conjunctions over disjunctions, first
  // keeping quantifier-free parts whole, then splitting them too.
  for (bool split : {false, true}) {
    BranchExpander expander(f, evidence, split);
    auto branches = expander.Expand(f);
    if (!branches) continue;
    std::vector<PreferredFormula> out;
    bool ok = true;
    for (const auto& b : *branches) {
      bool trivially_true = b.units.empty() && b.bound.empty();
      if (trivially_true) continue;
      auto p = BranchToPreferred(b, evidence);
      if (!p) {
        ok = false;
        break;
      }
      out.push_back(std::move(*p));
    }
    if (ok) return out;
  }
  return std::nullopt;
}

ClassTags ClassifyAll(const Formula& f, const MaEvidence& evidence) {
  ClassTags tags;
  if (f.quantifier_free()) {
    tags.insert(ClassTag::kQF);
    if (IsMaKnown(f, evidence)) {
      tags.insert(ClassTag::kA);
      tags.insert(ClassTag::kE);
      if (!IsMaKnown(f, MaEvidence{})) tags.insert(ClassTag::kQFMACertified);
    }
  } else if (f.kind() == FormulaKind::kExists && IsExistentialOverQf(f)) {
    const Formula* body = &f;
    while (body->kind() == FormulaKind::kExists) body = &body->body();
    if (IsMaKnown(*body, evidence)) tags.insert(ClassTag::kE);
  }
  if (AsPreferred(f, evidence)) tags.insert(ClassTag::kPreferred);
  if (IsPPositive(f, evidence)) tags.insert(ClassTag::kPPositiveCombination);
  if (tags.list().empty()) tags.insert(ClassTag::kOther);
  return tags;
}

ClassTag Classify(const Formula& f, const MaEvidence& evidence) {
  return ClassifyAll(f, evidence).primary();
}

}  // namespace malg
