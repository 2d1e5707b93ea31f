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

#ifndef MALG_REWRITE_NEGATE_H_
#define MALG_REWRITE_NEGATE_H_

#include <cstdint>
#include <optional>

#include "malg/rewrite/base.h"
#include "malg/syntax/classify.h"

namespace malg {

// !theta for theta = exists x (R(x, y) & S(x, y, z)), as
//   OR_{m<N} (E[=m] x . R(x, y) rewritten & psi_m(y, z))
//   psi_m = exists x_0 .. x_{m-1} (AND_i R(x_i, y) & pairwise distinct x_i &
//                                  AND_i !S(x_i, y, z))
// N defaults to the measured maximum count of R plus one.
RewriteResult NegatePreferred(const PreferredFormula& theta, const BaseCountRewriter& base,
                              const Family& family, std::optional<std::uint64_t> n = std::nullopt,
                              const MaEvidence& evidence = {});

}  // namespace malg

#endif  // MALG_REWRITE_NEGATE_H_
