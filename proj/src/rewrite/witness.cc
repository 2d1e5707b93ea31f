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

#include "malg/rewrite/witness.h"

#include <algorithm>

#include "malg/algebraicity/ma_bound.h"
#include "malg/error.h"
#include "malg/syntax/printer.h"

namespace malg {

namespace {

void CheckConstraint(const WitnessConstraint& c, const std::string& y, const VarTuple& z) {
  if (!c.r.quantifier_free()) {
    throw Error(ErrorCode::kShape, "witness constraint must be quantifier-free: " + Print(c.r));
  }
  if (!c.r.has_free(y)) {
    throw Error(ErrorCode::kShape, "'" + y + "' does not occur in " + Print(c.r));
  }
  if (c.z.empty()) throw Error(ErrorCode::kShape, "constraint with no avoided variable");
  for (const auto& v : c.z) {
    if (!z.contains(v)) throw Error(ErrorCode::kShape, "'" + v + "' not among " + ToString(z));
  }
  for (const auto& v : c.r.free_vars()) {
    if (v != y && !c.x.contains(v) && !c.z.contains(v)) {
      throw Error(ErrorCode::kShape, "free variable '" + v + "' of " + Print(c.r) +
                                         " is neither outer nor avoided");
    }
  }
}

}  // namespace

WitnessResult AvoidWitnesses(const FiniteStructure& m, const std::vector<WitnessConstraint>& rs,
                             const Assignment& a, const std::string& y, Element b,
                             const VarTuple& z) {
  WitnessResult out;
  out.b.resize(z.size());
  for (const auto& c : rs) {
    CheckConstraint(c, y, z);
    Assignment alpha;
    for (const auto& v : c.x) {
      auto it = a.find(v);
      if (it == a.end()) {
        throw Error(ErrorCode::kUnboundVariable, "outer variable '" + v + "' is not assigned");
      }
      alpha[v] = it->second;
    }
    alpha[y] = b;
    SolutionSet sols = Solutions(m, c.r, c.z, alpha);
    for (std::size_t i = 0; i < c.z.size(); ++i) {
      std::size_t l = std::find(z.begin(), z.end(), c.z[i]) - z.begin();
      for (const auto& t : sols.tuples) out.b[l].insert(t[i]);
    }
  }
  for (std::size_t l = 0; l < z.size(); ++l) {
    Element e = 0;
    while (e < m.size() && out.b[l].contains(e)) ++e;
    if (e == m.size()) {
      throw Error(ErrorCode::kStructureTooSmall,
                  "B for '" + z[l] + "' covers the universe of size " + std::to_string(m.size()));
    }
    out.e.push_back(e);
  }
  return out;
}

std::size_t WitnessMinUniverseSize(const Family& family, const std::vector<WitnessConstraint>& rs,
                                   const VarTuple& z) {
  if (z.empty()) return 0;
  std::vector<std::uint64_t> n(rs.size());
  for (std::size_t j = 0; j < rs.size(); ++j) n[j] = MaxSolutionCount(family, rs[j].r, rs[j].z);
  std::uint64_t worst = 0;
  for (const auto& zl : z) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (rs[j].z.contains(zl)) sum += n[j];
    }
    worst = std::max(worst, sum);
  }
  return static_cast<std::size_t>(worst) + 1;
}

}  // namespace malg
