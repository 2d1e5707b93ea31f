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

#include "malg/rewrite/to_p.h"

#include <algorithm>

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/rewrite/exact_count.h"
#include "malg/rewrite/messy.h"
#include "malg/rewrite/negate.h"
#include "malg/syntax/printer.h"
#include "malg/syntax/transform.h"

namespace malg {

namespace {

constexpr std::size_t kMaxDnfTerms = 256;

struct Literal {
  Formula atom;
  bool positive;
};
using Clause = std::vector<Literal>;

std::vector<Clause> Dnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return (f.kind() == FormulaKind::kTrue) == positive ? std::vector<Clause>{Clause{}}
                                                          : std::vector<Clause>{};
    case FormulaKind::kAtom:
    case FormulaKind::kEq:
      return {Clause{{f, positive}}};
    case FormulaKind::kNot:
      return Dnf(f.body(), !positive);
    case FormulaKind::kImplies:
      return Dnf(Formula::Or({Formula::Not(f.child(0)), f.child(1)}), positive);
    case FormulaKind::kIff:
      return Dnf(Formula::Or({Formula::And({f.child(0), f.child(1)}),
                              Formula::And({Formula::Not(f.child(0)), Formula::Not(f.child(1))})}),
                 positive);
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      bool conj = (f.kind() == FormulaKind::kAnd) == positive;
      if (!conj) {
        std::vector<Clause> out;
        for (const Formula& c : f.children()) {
          for (auto& cl : Dnf(c, positive)) out.push_back(std::move(cl));
        }
        return out;
      }
      std::vector<Clause> acc{Clause{}};
      for (const Formula& c : f.children()) {
        std::vector<Clause> next;
        for (const Clause& a : acc) {
          for (const Clause& b : Dnf(c, positive)) {
            Clause merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        }
        if (next.size() > kMaxDnfTerms) {
          throw Error(ErrorCode::kUnsupported, "disjunctive normal form too large");
        }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      throw Error(ErrorCode::kUnsupported, "quantifier inside quantifier-free part");
  }
}

class Rewriter {
 public:
  Rewriter(const BaseCountRewriter& base, const Family& family, MaEvidence ev)
      : base_(base), family_(family), ev_(std::move(ev)) {}

  Formula Pos(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return f;
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        std::vector<Formula> kids;
        for (const Formula& c : f.children()) kids.push_back(Pos(c));
        return f.kind() == FormulaKind::kAnd ? Formula::And(kids) : Formula::Or(kids);
      }
      case FormulaKind::kNot:
        return Neg(f.body());
      case FormulaKind::kImplies:
        return Formula::Or({Neg(f.child(0)), Pos(f.child(1))});
      case FormulaKind::kIff:
        return Formula::Or({Formula::And({Pos(f.child(0)), Pos(f.child(1))}),
                            Formula::And({Neg(f.child(0)), Neg(f.child(1))})});
      case FormulaKind::kForall:
        return Neg(Formula::Exists(f.bound(), Formula::Not(f.body())));
      case FormulaKind::kCount:
        return PosCount(f);
      default:
        return PosLeaf(f);
    }
  }

  Formula Neg(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
        return Formula::False();
      case FormulaKind::kFalse:
        return Formula::True();
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        std::vector<Formula> kids;
        for (const Formula& c : f.children()) kids.push_back(Neg(c));
        return f.kind() == FormulaKind::kAnd ? Formula::Or(kids) : Formula::And(kids);
      }
      case FormulaKind::kNot:
        return Pos(f.body());
      case FormulaKind::kImplies:
        return Formula::And({Pos(f.child(0)), Neg(f.child(1))});
      case FormulaKind::kIff:
        return Formula::Or({Formula::And({Pos(f.child(0)), Neg(f.child(1))}),
                            Formula::And({Neg(f.child(0)), Pos(f.child(1))})});
      case FormulaKind::kForall:
        return Pos(Formula::Exists(f.bound(), Formula::Not(f.body())));
      case FormulaKind::kCount:
        return NegCount(f);
      default:
        return NegLeaf(f);
    }
  }

  std::size_t min_size() const { return min_size_; }
  std::vector<TraceStep>& trace() { return trace_; }
  MaEvidence& evidence() { return ev_; }

 private:
  Formula Exact(const Formula& r, const VarTuple& x, std::uint32_t m) {
    if (!r.quantifier_free()) {
      throw Error(ErrorCode::kUnsupported, "counting over a quantified body: " + Print(r));
    }
    std::vector<std::string> ys;
    for (const auto& v : r.free_vars()) {
      if (!x.contains(v)) ys.push_back(v);
    }
    if (ys.empty()) throw Error(ErrorCode::kUnsupported, "counting sentence: " + Print(r));
    RewriteResult res = ExactCountToPreferred(r, x, VarTuple(ys), m, base_, family_, std::nullopt, ev_);
    Absorb(res);
    return res.output;
  }

  Formula AtLeast(const Formula& f) {
    Formula expanded = ExpandCounting(f);
    if (AsPreferred(expanded, ev_)) return expanded;
    return PosLeaf(expanded);
  }

  Formula PosCount(const Formula& f) {
    const std::uint32_t r = f.count();
    switch (f.count_mode()) {
      case CountMode::kExactly:
        return Exact(f.body(), f.bound(), r);
      case CountMode::kAtLeast:
        return r == 0 ? Formula::True() : AtLeast(f);
      case CountMode::kAtMost: {
        std::vector<Formula> kids;
        for (std::uint32_t m = 0; m <= r; ++m) kids.push_back(Exact(f.body(), f.bound(), m));
        return Formula::Or(kids);
      }
    }
    return f;
  }

  Formula NegCount(const Formula& f) {
    const std::uint32_t r = f.count();
    auto below = [&](std::uint32_t limit) {
      std::vector<Formula> kids;
      for (std::uint32_t m = 0; m < limit; ++m) kids.push_back(Exact(f.body(), f.bound(), m));
      return kids;
    };
    Formula more = Formula::Count(CountMode::kAtLeast, r + 1, f.bound(), f.body());
    switch (f.count_mode()) {
      case CountMode::kExactly: {
        std::vector<Formula> kids = below(r);
        kids.push_back(AtLeast(more));
        return Formula::Or(kids);
      }
      case CountMode::kAtLeast:
        return Formula::Or(below(r));
      case CountMode::kAtMost:
        return AtLeast(more);
    }
    return f;
  }

  Formula PosLeaf(const Formula& f) {
    if (AsPreferred(f, ev_)) return f;
    if (f.quantifier_free() && f.free_vars().size() <= 1) return f;
    // exists x . psi(x, y) over literals
    std::vector<std::string> bound;
    Formula body = f;
    while (body.kind() == FormulaKind::kExists) {
      bound.insert(bound.end(), body.bound().begin(), body.bound().end());
      body = body.body();
    }
    if (!body.quantifier_free() || f.free_vars().size() != 1) {
      throw Error(ErrorCode::kUnsupported, "outside the supported fragment: " + Print(f));
    }
    VarTuple x(bound);
    const std::string& y = f.free_vars().front();
    std::vector<Formula> parts;
    for (const Clause& cl : Dnf(body, true)) {
      std::vector<Formula> pos, neg;
      for (const Literal& l : cl) {
        if (!l.atom.has_free(y)) {
          throw Error(ErrorCode::kUnsupported,
                      "literal " + Print(l.atom) + " does not mention '" + y + "'");
        }
        (l.positive ? pos : neg).push_back(l.atom);
      }
      RewriteResult res = MessyReduce(pos, neg, x, y, family_, ev_);
      Absorb(res);
      parts.push_back(res.output);
    }
    return Formula::Or(parts);
  }

  Formula NegLeaf(const Formula& f) {
    if (f.quantifier_free() && f.free_vars().size() <= 1) return Formula::Not(f);
    std::optional<PreferredFormula> p = AsPreferred(f, ev_);
    if (!p) {
      // rewrite positively first, then negate the preferred constituents
      Formula pos = PosLeaf(f);
      if (pos == f || AsPreferred(pos, ev_)) {
        if (!AsPreferred(pos, ev_)) throw Error(ErrorCode::kUnsupported, "cannot negate " + Print(f));
        p = AsPreferred(pos, ev_);
      } else {
        return Neg(pos);
      }
    }
    RewriteResult res = NegatePreferred(*p, base_, family_, std::nullopt, ev_);
    Absorb(res);
    return res.output;
  }

  void Absorb(const RewriteResult& res) {
    ev_.Merge(res.evidence);
    min_size_ = std::max(min_size_, res.min_universe_size);
    trace_.insert(trace_.end(), res.trace.begin(), res.trace.end());
  }

  const BaseCountRewriter& base_;
  const Family& family_;
  MaEvidence ev_;
  std::size_t min_size_ = 0;
  std::vector<TraceStep> trace_;
};

}  // namespace

RewriteResult ToP(const Formula& phi, const BaseCountRewriter& base, const Family& family,
                  const MaEvidence& evidence) {
  MaEvidence ev = evidence;
  ev.Merge(CertifyAtoms(family, phi));
  if (ClassifyAll(phi, ev).has(ClassTag::kPPositiveCombination)) {
    return Finish(phi, std::move(ev), 0, {{"already-in-P", phi}});
  }
  Rewriter rw(base, family, std::move(ev));
  Formula out = rw.Pos(phi);
  std::vector<TraceStep> trace{{"to-P-input", phi}};
  trace.insert(trace.end(), rw.trace().begin(), rw.trace().end());
  trace.push_back({"to-P", out});
  return Finish(out, std::move(rw.evidence()), rw.min_size(), std::move(trace));
}

}  // namespace malg
