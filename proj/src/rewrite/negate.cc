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

#include "malg/rewrite/negate.h"

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/rewrite/exact_count.h"
#include "malg/syntax/transform.h"

namespace malg {

RewriteResult NegatePreferred(const PreferredFormula& theta, const BaseCountRewriter& base,
                              const Family& family, std::optional<std::uint64_t> n,
                              const MaEvidence& evidence) {
  const Formula& r = theta.r();
  const VarTuple& x = theta.x();
  const VarTuple& y = theta.y();
  std::uint64_t measured = MaxSolutionCount(family, r, x);
  if (n.has_value() && *n <= measured) {
    throw Error(ErrorCode::kBoundTooSmall, "N = " + std::to_string(*n) + " but " +
                                               std::to_string(measured) +
                                               " solutions occur on the family");
  }
  const std::uint64_t big_n = n.value_or(measured + 1);
  Formula input = Formula::Not(theta.ToFormula());
  std::vector<TraceStep> trace{{"negate-input", input}};

  FreshNames fresh;
  fresh.Reserve(theta.ToFormula());
  for (const auto& v : x + y + theta.z()) fresh.Reserve(v);

  MaEvidence ev = evidence;
  std::vector<Formula> disjuncts;
  std::size_t min_size = 0;
  for (std::uint32_t m = 0; m < big_n; ++m) {
    RewriteResult count = ExactCountToPreferred(r, x, y, m, base, family, std::nullopt, ev);
    ev.Merge(count.evidence);
    min_size = std::max(min_size, count.min_universe_size);

    std::vector<VarTuple> xs;
    std::vector<std::string> bound;
    std::vector<Formula> conj;
    for (std::uint32_t i = 0; i < m; ++i) {
      xs.push_back(fresh.FreshCopy(x));
      bound.insert(bound.end(), xs.back().begin(), xs.back().end());
      conj.push_back(Instantiate(r, x, xs.back()));
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) conj.push_back(Formula::TupleNeq(xs[i], xs[j]));
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      conj.push_back(Formula::Not(Instantiate(theta.s(), x, xs[i])));
    }
    Formula psi = Formula::Exists(VarTuple(bound), Formula::And(std::move(conj)));
    trace.push_back({"count_" + std::to_string(m), count.output});
    trace.push_back({"psi_" + std::to_string(m), psi});
    disjuncts.push_back(Formula::And({count.output, psi}));
  }
  Formula out = Formula::Or(std::move(disjuncts));
  trace.push_back({"negation", out});
  return Finish(out, std::move(ev), min_size, std::move(trace));
}

}  // namespace malg
