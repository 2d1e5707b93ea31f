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

#include "malg/rewrite/exact_count.h"

#include <algorithm>

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/syntax/printer.h"
#include "malg/syntax/transform.h"

namespace malg {

namespace {

// Calls visit(mask) for every r-subset of {0..m-1}.
template <typename Visit>
void ForEachSubset(std::uint32_t m, std::uint32_t r, Visit&& visit) {
  if (r > m) return;
  std::vector<bool> in(m, false);
  std::fill(in.begin(), in.begin() + r, true);
  do {
    visit(in);
  } while (std::prev_permutation(in.begin(), in.end()));
}

}  // namespace

RewriteResult ExactCountToPreferred(const Formula& r_formula, const VarTuple& x,
                                    const VarTuple& y, std::uint32_t r,
                                    const BaseCountRewriter& base, const Family& family,
                                    std::optional<std::uint64_t> n, const MaEvidence& evidence) {
  if (y.empty()) throw Error(ErrorCode::kShape, "need at least one y variable");
  if (!r_formula.quantifier_free()) {
    throw Error(ErrorCode::kShape, "R must be quantifier-free: " + Print(r_formula));
  }
  VarTuple xy = x + y;
  for (const auto& v : r_formula.free_vars()) {
    if (!xy.contains(v)) {
      throw Error(ErrorCode::kShape, "free variable '" + v + "' outside " + ToString(xy));
    }
  }
  MaEvidence ev = evidence;
  FamilyStabilityReport report = CertifyKernel(family, r_formula, ev);
  if (report.verdict == Verdict::kGrowing) {
    throw Error(ErrorCode::kNotStable, Print(r_formula) + " is not mutually algebraic on the family");
  }
  Formula input = Formula::Count(CountMode::kExactly, r, x, r_formula);
  const std::string y_star = y[y.size() - 1];
  if (y.size() == 1) {
    RewriteResult b = base.RewriteExact(r_formula, x, y_star, r);
    ev.Merge(b.evidence);
    std::vector<TraceStep> trace{{"exact-count-input", input}};
    trace.insert(trace.end(), b.trace.begin(), b.trace.end());
    return Finish(b.output, std::move(ev), b.min_universe_size, std::move(trace));
  }
  std::vector<std::string> yp_names(y.begin(), y.end() - 1);
  VarTuple yp(yp_names);
  VarTuple uv = x + yp;

  std::uint64_t measured = MaxSolutionCount(family, r_formula, uv);
  if (n.has_value() && *n <= measured) {
    throw Error(ErrorCode::kBoundTooSmall, "N = " + std::to_string(*n) + " but " +
                                               std::to_string(measured) +
                                               " solutions occur on the family");
  }
  const std::uint64_t big_n = n.value_or(measured + 1);

  FreshNames fresh;
  fresh.Reserve(r_formula);
  for (const auto& v : xy) fresh.Reserve(v);
  VarTuple w = fresh.FreshCopy(uv);
  Formula r_w = Instantiate(r_formula, uv, w);

  std::vector<TraceStep> trace{{"exact-count-input", input}};
  std::vector<Formula> disjuncts;
  std::size_t min_size = 0;
  for (std::uint32_t m = 0; m < big_n; ++m) {
    std::vector<VarTuple> us, vs;
    std::vector<std::string> bound;
    std::vector<Formula> conj;
    for (std::uint32_t i = 0; i < m; ++i) {
      us.push_back(fresh.FreshCopy(x));
      vs.push_back(fresh.FreshCopy(yp));
      VarTuple uvi = us.back() + vs.back();
      bound.insert(bound.end(), uvi.begin(), uvi.end());
      conj.push_back(Instantiate(r_formula, uv, uvi));
    }
    std::vector<Formula> s;
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) {
        s.push_back(Formula::TupleNeq(us[i] + vs[i], us[j] + vs[j]));
      }
    }
    std::vector<Formula> choices;
    ForEachSubset(m, r, [&](const std::vector<bool>& in) {
      std::vector<Formula> c;
      for (std::uint32_t i = 0; i < m; ++i) {
        c.push_back(in[i] ? Formula::TupleEq(vs[i], yp) : Formula::TupleNeq(vs[i], yp));
      }
      choices.push_back(Formula::And(std::move(c)));
    });
    s.push_back(Formula::Or(std::move(choices)));
    Formula s_m = Formula::And(std::move(s));
    conj.push_back(s_m);
    Formula theta_m = Formula::Exists(VarTuple(bound), Formula::And(std::move(conj)));
    trace.push_back({"S_" + std::to_string(m), s_m});
    trace.push_back({"theta_" + std::to_string(m), theta_m});

    RewriteResult b = base.RewriteExact(r_w, w, y_star, m);
    ev.Merge(b.evidence);
    min_size = std::max(min_size, b.min_universe_size);
    trace.push_back({"base_" + std::to_string(m), b.output});
    disjuncts.push_back(Formula::And({b.output, theta_m}));
  }
  Formula delta = Formula::Or(std::move(disjuncts));
  trace.push_back({"delta", delta});
  return Finish(delta, std::move(ev), min_size, std::move(trace));
}

}  // namespace malg
