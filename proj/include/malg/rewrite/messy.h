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

#ifndef MALG_REWRITE_MESSY_H_
#define MALG_REWRITE_MESSY_H_

#include <string>
#include <vector>

#include "malg/rewrite/rewrite_result.h"

namespace malg {

// Rewrites exists x . (AND_I R_i & AND_J !R_j) in one free variable y into
// a preferred formula: y = y when I is empty, otherwise
// exists x' . (AND_I R_i & AND_K !R_j), where x' is the shortest
// subsequence of x containing the x-variables of every R_i and K collects
// the R_j whose x-variables lie in x'.
//
// Every R must be quantifier-free and mention y, and its free variables
// must lie in x plus y; otherwise Error(kShape). Each R is certified on
// `family` and the certified kernels are recorded as evidence.
RewriteResult MessyReduce(const std::vector<Formula>& positives,
                          const std::vector<Formula>& negatives, const VarTuple& x,
                          const std::string& y, const Family& family,
                          const MaEvidence& evidence = {});

// Same, reading the conjuncts of `psi`; a conjunct !R is negative.
RewriteResult MessyReduce(const Formula& psi, const VarTuple& x, const std::string& y,
                          const Family& family, const MaEvidence& evidence = {});

}  // namespace malg

#endif  // MALG_REWRITE_MESSY_H_
