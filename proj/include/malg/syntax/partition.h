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

#ifndef MALG_SYNTAX_PARTITION_H_
#define MALG_SYNTAX_PARTITION_H_

#include <vector>

#include "malg/syntax/var_tuple.h"

namespace malg {

// An ordered split z = x ^ y into nonempty parts with disjoint ranges that
// together cover z. The x part need not be an initial segment of z; both
// parts keep z's relative order.
struct ProperPartition {
  VarTuple x;
  VarTuple y;

  friend bool operator==(const ProperPartition&, const ProperPartition&) = default;
};

// All 2^n - 2 proper partitions of `z` (none when z has one variable),
// ordered by the bitmask of positions placed in x.
std::vector<ProperPartition> ProperPartitions(const VarTuple& z);

}  // namespace malg

#endif  // MALG_SYNTAX_PARTITION_H_
