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

#ifndef MALG_ALGEBRAICITY_CLOSURE_H_
#define MALG_ALGEBRAICITY_CLOSURE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "malg/syntax/formula.h"

namespace malg {

// A formula over `vars` built from mutually algebraic inputs. The note says
// what is known about its bound; anything not stated must be re-measured
// with MaBound.
struct ClosureResult {
  Formula formula;
  VarTuple vars;
  std::string bound_note;
};

// phi(sigma(z)): renames z[i] to image[i]; `image` must be a permutation of
// z. The bound is unchanged on every structure.
ClosureResult ClosurePermute(const Formula& f, const VarTuple& z, const VarTuple& image);

// exists y . phi(x, y).
ClosureResult ClosureProject(const Formula& f, const VarTuple& x, const VarTuple& y);

// phi(x, a): y replaced by the parameter terms, which must be literals or
// constants and match y in length.
ClosureResult ClosureSpecialize(const Formula& f, const VarTuple& x, const VarTuple& y,
                                const std::vector<Term>& params);

struct ClosurePart {
  Formula formula;
  VarTuple vars;
};

// Conjunction of at least one part; the parts' variable ranges must share a
// common variable. The result's variables are the union in first-seen order.
ClosureResult ClosureConjoin(const std::vector<ClosurePart>& parts);

// E[>=r] x . phi(x, y).
ClosureResult ClosureCount(const Formula& f, const VarTuple& x, const VarTuple& y,
                           std::uint32_t r);

}  // namespace malg

#endif  // MALG_ALGEBRAICITY_CLOSURE_H_
