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

#include "malg/rewrite/messy.h"

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/rewrite/witness.h"
#include "malg/syntax/printer.h"

namespace malg {

namespace {

VarTuple XVars(const Formula& r, const VarTuple& x) {
  std::vector<std::string> out;
  for (const auto& v : x) {
    if (r.has_free(v)) out.push_back(v);
  }
  return VarTuple(out);
}

void CheckLiteral(const Formula& r, const VarTuple& x, const std::string& y) {
  if (!r.quantifier_free()) {
    throw Error(ErrorCode::kShape, "conjunct must be quantifier-free: " + Print(r));
  }
  if (!r.has_free(y)) throw Error(ErrorCode::kShape, "'" + y + "' does not occur in " + Print(r));
  for (const auto& v : r.free_vars()) {
    if (v != y && !x.contains(v)) {
      throw Error(ErrorCode::kShape, "free variable '" + v + "' of " + Print(r) +
                                         " is outside the quantified tuple");
    }
  }
}

}  // namespace

RewriteResult MessyReduce(const std::vector<Formula>& positives,
                          const std::vector<Formula>& negatives, const VarTuple& x,
                          const std::string& y, const Family& family,
                          const MaEvidence& evidence) {
  if (x.contains(y)) throw Error(ErrorCode::kShape, "'" + y + "' is quantified");
  MaEvidence ev = evidence;
  for (const auto* list : {&positives, &negatives}) {
    for (const Formula& r : *list) {
      CheckLiteral(r, x, y);
      CertifyKernel(family, r, ev);
      if (!IsMaKnown(r, ev)) {
        throw Error(ErrorCode::kShape, Print(r) + " is not mutually algebraic on the family");
      }
    }
  }
  std::vector<Formula> input_conj = positives;
  for (const Formula& r : negatives) input_conj.push_back(Formula::Not(r));
  Formula input = Formula::Exists(x, Formula::And(input_conj));
  std::vector<TraceStep> trace{{"messy-input", input}};

  std::vector<std::string> kept;
  for (const auto& v : x) {
    for (const Formula& r : positives) {
      if (r.has_free(v)) {
        kept.push_back(v);
        break;
      }
    }
  }
  VarTuple xp(kept);
  VarTuple rest = x.without(xp);

  std::vector<Formula> conj = positives;
  std::vector<WitnessConstraint> avoided;
  for (const Formula& r : negatives) {
    VarTuple xr = XVars(r, x);
    if (xr.without(xp).empty()) {
      conj.push_back(Formula::Not(r));
    } else {
      avoided.push_back({r, XVars(r, xp), xr.without(xp)});
    }
  }
  // With no positive conjunct K holds only the negated formulas in y alone.
  Formula out = conj.empty() ? Formula::VarEq(y, y) : Formula::Exists(xp, Formula::And(conj));
  std::size_t min_size = WitnessMinUniverseSize(family, avoided, rest);
  trace.push_back({"messy-reduce", out});
  return Finish(out, std::move(ev), min_size, std::move(trace));
}

RewriteResult MessyReduce(const Formula& psi, const VarTuple& x, const std::string& y,
                          const Family& family, const MaEvidence& evidence) {
  std::vector<Formula> pos, neg;
  for (const Formula& c : Conjuncts(psi)) {
    if (c.kind() == FormulaKind::kNot) {
      neg.push_back(c.body());
    } else {
      pos.push_back(c);
    }
  }
  return MessyReduce(pos, neg, x, y, family, evidence);
}

}  // namespace malg
