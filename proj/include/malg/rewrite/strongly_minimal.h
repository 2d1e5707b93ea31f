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

#ifndef MALG_REWRITE_STRONGLY_MINIMAL_H_
#define MALG_REWRITE_STRONGLY_MINIMAL_H_

#include <string>
#include <vector>

#include "malg/rewrite/rewrite_result.h"

namespace malg {

struct StronglyMinimalRewrite {
  RewriteResult result;
  bool cofinite = false;
  // Named by a constant when one names the element on every cutout of the
  // suffix, else by a literal.
  std::vector<Term> q;
};

// phi(y) is replaced by OR_{q in Q} y = q when its solution sets agree on
// the last `suffix` cutouts, or by the negation when their complements do.
// The empty disjunction is written !(y = y) and its negation y = y.
// min_universe_size is the smallest cutout from which the pattern holds to
// the end of the family.
//
// Throws Error(kNotStable) when neither settles or the family is shorter
// than `suffix`, Error(kFreeVariableMismatch) when phi has free variables
// other than y.
StronglyMinimalRewrite RewriteStronglyMinimal(const Family& family, const Formula& phi,
                                              const std::string& y, std::size_t suffix = 3);

}  // namespace malg

#endif  // MALG_REWRITE_STRONGLY_MINIMAL_H_
