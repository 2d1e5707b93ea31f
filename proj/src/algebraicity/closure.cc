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

#include "malg/algebraicity/closure.h"

#include <algorithm>
#include <map>
#include <set>

#include "malg/error.h"
#include "malg/syntax/transform.h"

namespace malg {

namespace {

void CheckCovered(const Formula& f, const VarTuple& vars) {
  for (const auto& v : f.free_vars()) {
    if (!vars.contains(v)) {
      throw Error(ErrorCode::kFreeVariableMismatch,
                  "free variable '" + v + "' not among " + ToString(vars));
    }
  }
}

void CheckPartition(const Formula& f, const VarTuple& x, const VarTuple& y) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "both parts of the partition must be nonempty");
  }
  CheckCovered(f, x + y);
}

}  // namespace

ClosureResult ClosurePermute(const Formula& f, const VarTuple& z, const VarTuple& image) {
  CheckCovered(f, z);
  if (z.range() != image.range()) {
    throw Error(ErrorCode::kInvalidArgument,
                ToString(image) + " is not a permutation of " + ToString(z));
  }
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < z.size(); ++i) rename[z[i]] = image[i];
  return {RenameFree(f, rename), z, "bound unchanged"};
}

ClosureResult ClosureProject(const Formula& f, const VarTuple& x, const VarTuple& y) {
  CheckPartition(f, x, y);
  return {Formula::Exists(y, f), x, "re-measure"};
}

ClosureResult ClosureSpecialize(const Formula& f, const VarTuple& x, const VarTuple& y,
                                const std::vector<Term>& params) {
  CheckPartition(f, x, y);
  if (params.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(y.size()) + " parameters, got " +
                    std::to_string(params.size()));
  }
  std::map<std::string, Term> sigma;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (params[i].is_variable()) {
      throw Error(ErrorCode::kInvalidArgument, "parameters must be literals or constants");
    }
    sigma.emplace(y[i], params[i]);
  }
  return {Substitute(f, sigma), x,
          x.size() == 1 ? "vacuous (one free variable)" : "at most the original bound"};
}

ClosureResult ClosureConjoin(const std::vector<ClosurePart>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "conjoin needs at least one part");
  std::set<std::string> common = parts.front().vars.range();
  std::vector<std::string> all;
  std::vector<Formula> conj;
  for (const auto& p : parts) {
    CheckCovered(p.formula, p.vars);
    std::set<std::string> keep;
    for (const auto& v : p.vars) {
      if (common.contains(v)) keep.insert(v);
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    }
    common = std::move(keep);
    conj.push_back(p.formula);
  }
  if (common.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "conjoined variable tuples share no variable");
  }
  return {Formula::And(std::move(conj)), VarTuple(all), "re-measure"};
}

ClosureResult ClosureCount(const Formula& f, const VarTuple& x, const VarTuple& y,
                           std::uint32_t r) {
  CheckPartition(f, x, y);
  return {Formula::Count(CountMode::kAtLeast, r, x, f), y,
          y.size() == 1 ? "vacuous (one free variable)" : "re-measure"};
}

}  // namespace malg
