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

#ifndef MALG_REWRITE_WITNESS_H_
#define MALG_REWRITE_WITNESS_H_

#include <set>
#include <string>
#include <vector>

#include "malg/semantics/evaluator.h"

namespace malg {

// R_j(x_j, y, z_j): a quantifier-free formula mentioning y whose remaining
// free variables are split into outer variables x_j and avoided variables
// z_j (a nonempty subtuple of the global z).
struct WitnessConstraint {
  Formula r;
  VarTuple x;
  VarTuple z;
};

struct WitnessResult {
  std::vector<Element> e;             // one value per z variable
  std::vector<std::set<Element>> b;   // the sets B_l
};

// Computes, for each z_l, the set B_l of values z_l takes in some solution
// of some R_j with j in J_l (the constraints mentioning z_l), with x fixed
// by `a` and y by `b`, and picks e_l as the least value outside B_l. Then
// no R_j holds at (a_j, b, e_j).
//
// Throws Error(kStructureTooSmall) when some B_l is the whole universe and
// Error(kShape) when a constraint is malformed.
WitnessResult AvoidWitnesses(const FiniteStructure& m, const std::vector<WitnessConstraint>& rs,
                             const Assignment& a, const std::string& y, Element b,
                             const VarTuple& z);

// 1 + max_l sum_{j in J_l} N_j, where N_j bounds the z_j-solutions of R_j
// over the family; 0 when z is empty.
std::size_t WitnessMinUniverseSize(const Family& family, const std::vector<WitnessConstraint>& rs,
                                   const VarTuple& z);

}  // namespace malg

#endif  // MALG_REWRITE_WITNESS_H_
