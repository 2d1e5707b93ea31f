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

#include "malg/rewrite/base.h"

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/rewrite/strongly_minimal.h"
#include "malg/syntax/printer.h"
#include "malg/syntax/transform.h"

namespace malg {

RewriteResult StronglyMinimalBase::RewriteExact(const Formula& r, const VarTuple& x,
                                                const std::string& y, std::uint32_t count) const {
  Formula phi = Formula::Count(CountMode::kExactly, count, x, r);
  return RewriteStronglyMinimal(family_, phi, y, suffix_).result;
}

RewriteResult Rank1Base::RewriteExact(const Formula& r, const VarTuple& x, const std::string& y,
                                      std::uint32_t count) const {
  MaEvidence ev;
  for (const auto& k : kernels_) {
    if (CertifyKernel(family_, k.formula, ev, suffix_).verdict == Verdict::kGrowing) {
      throw Error(ErrorCode::kBaseFailure, "kernel " + Print(k.formula) + " grows on the family");
    }
  }
  Rank1Config cfg = EstimateRank1Config(family_, kernels_, r, x, y, count, suffix_);
  RewriteResult at_most = Rank1Delta(cfg, r, x, y, count);
  Formula at_least = ExpandCounting(Formula::Count(CountMode::kAtLeast, count, x, r));
  Formula out = Formula::And({at_least, at_most.output});
  ev.Merge(at_most.evidence);
  std::vector<TraceStep> trace = at_most.trace;
  trace.push_back({"rank1-exact", out});
  return Finish(out, std::move(ev), at_most.min_universe_size, std::move(trace));
}

RewriteResult FailingBase::RewriteExact(const Formula& r, const VarTuple& x, const std::string&,
                                        std::uint32_t count) const {
  throw Error(ErrorCode::kBaseFailure,
              "no base rewrite for " + Print(Formula::Count(CountMode::kExactly, count, x, r)));
}

}  // namespace malg
