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

#ifndef MALG_SEMANTICS_EVALUATOR_H_
#define MALG_SEMANTICS_EVALUATOR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "malg/semantics/structure.h"
#include "malg/syntax/formula.h"

namespace malg {

using Assignment = std::map<std::string, Element>;

// A formula compiled against one structure for repeated evaluation under
// different assignments to a fixed input tuple.
//
// Evaluation is exhaustive search. Existential, universal and counting
// blocks bind their variables in a greedy order and test each conjunct of
// the body as soon as its variables are bound, so constrained searches are
// pruned early. Subformulas containing a quantifier whose value depends on
// at most two outer variables are memoized for the evaluator's lifetime.
//
// Not thread-safe: use one Evaluator per thread.
class Evaluator {
 public:
  // `inputs` must cover free(f). Throws Error(kUnboundVariable) if it does
  // not, Error(kUnknownSymbol) for relations or constants missing from `m`,
  // and Error(kArityMismatch) for atoms of the wrong length.
  Evaluator(const FiniteStructure& m, const Formula& f, const VarTuple& inputs);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  // `values[i]` is the value of inputs[i]; each must be below the universe
  // size.
  bool operator()(std::span<const Element> values);
  bool operator()(const Assignment& assignment);

  const VarTuple& inputs() const;

 private:
  friend class SolutionSearch;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Satisfaction of `f` in `m` under `alpha`, which must cover free(f).
bool Evaluate(const FiniteStructure& m, const Formula& f, const Assignment& alpha);

// The tuples for `vars` that satisfy `f` with the remaining free variables
// fixed by `alpha`, in lexicographic order.
struct SolutionSet {
  VarTuple vars;
  std::vector<std::vector<Element>> tuples;

  std::size_t size() const { return tuples.size(); }
  bool contains(const std::vector<Element>& t) const;
};

SolutionSet Solutions(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                      const Assignment& alpha = {});
std::uint64_t CountSolutions(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                             const Assignment& alpha = {});

// Calls `visit(values)` for every tuple in {0..n-1}^k in lexicographic
// order; stops early when `visit` returns false.
template <typename Visit>
void ForEachTuple(Element n, std::size_t k, Visit&& visit) {
  std::vector<Element> t(k, 0);
  if (k > 0 && n == 0) return;
  for (;;) {
    if (!visit(std::span<const Element>(t))) return;
    std::size_t i = k;
    while (i > 0) {
      if (++t[i - 1] < n) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace malg

#endif  // MALG_SEMANTICS_EVALUATOR_H_
