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

#ifndef MALG_REWRITE_TO_P_H_
#define MALG_REWRITE_TO_P_H_

#include "malg/rewrite/base.h"

namespace malg {

// Rewrites a boolean combination of existential, counting and
// quantifier-free formulas into a positive combination of preferred
// formulas. Negations are pushed inward; negated preferred formulas go
// through NegatePreferred, exact counts through ExactCountToPreferred, and
// one-variable existentials over literals through MessyReduce. Formulas
// that already are positive combinations come back unchanged.
//
// Relation atoms of `phi` are certified on `family` and join `evidence`.
// Throws Error(kUnsupported) for parts outside this fragment.
RewriteResult ToP(const Formula& phi, const BaseCountRewriter& base, const Family& family,
                  const MaEvidence& evidence = {});

}  // namespace malg

#endif  // MALG_REWRITE_TO_P_H_
