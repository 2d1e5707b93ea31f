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

#ifndef MALG_REWRITE_EXACT_COUNT_H_
#define MALG_REWRITE_EXACT_COUNT_H_

#include <cstdint>
#include <optional>

#include "malg/rewrite/base.h"

namespace malg {

// E[=r] x . R(x, y) as a positive combination of preferred formulas. With
// y = y' y*, and N above every count of R(x y', y*) solutions for fixed y*:
//
//   S_m   = pairwise distinct u_i v_i  &
//           OR_{Q of size r} (AND_{i in Q} v_i = y' & AND_{i not in Q} v_i != y')
//   th_m  = exists u_0 v_0 .. u_{m-1} v_{m-1} (AND_i R(u_i v_i, y*) & S_m)
//   delta = OR_{m<N} (base(E[=m] w . R(w, y*)) & th_m)
//
// A single y goes straight to the base. N defaults to the measured maximum
// plus one; a supplied N at or below that maximum raises
// Error(kBoundTooSmall). R is certified on the family and must not be
// growing (Error(kNotStable)).
RewriteResult ExactCountToPreferred(const Formula& r_formula, const VarTuple& x,
                                    const VarTuple& y, std::uint32_t r,
                                    const BaseCountRewriter& base, const Family& family,
                                    std::optional<std::uint64_t> n = std::nullopt,
                                    const MaEvidence& evidence = {});

}  // namespace malg

#endif  // MALG_REWRITE_EXACT_COUNT_H_
