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

#ifndef MALG_SEMANTICS_ORACLE_H_
#define MALG_SEMANTICS_ORACLE_H_

#include <optional>

#include "malg/semantics/evaluator.h"

namespace malg {

struct EquivalenceResult {
  bool equivalent = true;
  // A full assignment, in sorted variable order, on which the formulas
  // disagree.
  std::optional<Assignment> counterexample;

  explicit operator bool() const { return equivalent; }
};

// Exhaustive comparison over all assignments to the free variables.
// Throws Error(kFreeVariableMismatch) when free(a) != free(b).
EquivalenceResult EquivalentOn(const FiniteStructure& m, const Formula& a, const Formula& b);

// Comparison over all assignments to `vars`, which must cover the free
// variables of both formulas.
EquivalenceResult EquivalentOn(const FiniteStructure& m, const Formula& a, const Formula& b,
                               const VarTuple& vars);

}  // namespace malg

#endif  // MALG_SEMANTICS_ORACLE_H_
