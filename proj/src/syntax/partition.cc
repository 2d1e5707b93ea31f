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

#include "malg/syntax/partition.h"

#include <cstdint>

#include "malg/error.h"

namespace malg {

std::vector<ProperPartition> ProperPartitions(const VarTuple& z) {
  if (z.size() >= 32) throw Error(ErrorCode::kInvalidArgument, "tuple too long to partition");
  std::vector<ProperPartition> out;
  const std::uint32_t full = (1u << z.size()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<std::string> x, y;
    for (std::size_t i = 0; i < z.size(); ++i) {
      ((mask >> i) & 1u ? x : y).push_back(z[i]);
    }
    out.push_back({VarTuple(std::move(x)), VarTuple(std::move(y))});
  }
  return out;
}

}  // namespace malg
