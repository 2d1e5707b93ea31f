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

#include "malg/semantics/oracle.h"

#include <algorithm>
#include <set>

#include "malg/error.h"

namespace malg {

EquivalenceResult EquivalentOn(const FiniteStructure& m, const Formula& a, const Formula& b) {
  if (a.free_vars() != b.free_vars()) {
    throw Error(ErrorCode::kFreeVariableMismatch,
                "free variables differ: " + ToString(VarTuple(a.free_vars())) + " vs " +
                    ToString(VarTuple(b.free_vars())));
  }
  return EquivalentOn(m, a, b, VarTuple(a.free_vars()));
}

EquivalenceResult EquivalentOn(const FiniteStructure& m, const Formula& a, const Formula& b,
                               const VarTuple& vars) {
  std::set<std::string> sorted(vars.begin(), vars.end());
  VarTuple order(std::vector<std::string>(sorted.begin(), sorted.end()));
  for (const Formula* f : {&a, &b}) {
    for (const auto& v : f->free_vars()) {
      if (!order.contains(v)) {
        throw Error(ErrorCode::kFreeVariableMismatch,
                    "free variable '" + v + "' not among " + ToString(order));
      }
    }
  }
  Evaluator ea(m, a, order);
  Evaluator eb(m, b, order);
  EquivalenceResult out;
  ForEachTuple(m.size(), order.size(), [&](std::span<const Element> t) {
    if (ea(t) == eb(t)) return true;
    Assignment w;
    for (std::size_t i = 0; i < order.size(); ++i) w[order[i]] = t[i];
    out.equivalent = false;
    out.counterexample = std::move(w);
    return false;
  });
  return out;
}

}  // namespace malg
