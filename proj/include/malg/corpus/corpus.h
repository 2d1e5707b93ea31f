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

#ifndef MALG_CORPUS_CORPUS_H_
#define MALG_CORPUS_CORPUS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "malg/semantics/structure.h"

namespace malg {

enum class FamilyKind {
  kDirectedCycle,      // E(i, i+1 mod n)
  kUndirectedCycle,    // E symmetric on the n-cycle
  kSuccessorChain,     // S(i, i+1)
  kPureSet,            // equality and constants only
  kMatching,           // size 2k: U = {0..k-1}, B(i, k+i)
  kCompleteBipartite,  // size 2k: E between the halves, both directions
};

std::string_view FamilyKindName(FamilyKind kind);
// Accepts the full names above and the aliases cycle, dcycle, chain,
// pureset, matching, bipartite.
std::optional<FamilyKind> ParseFamilyKind(std::string_view name);

// Sizes are universe sizes; the two-colour kinds need even sizes.
struct FamilySpec {
  FamilyKind kind;
  std::vector<Element> sizes;
  std::map<std::string, Element> constants;
};

// Error(kInvalidArgument) for sizes that are not strictly increasing, odd
// sizes of two-colour kinds, a zero size, or constants not below the
// smallest size.
void ValidateFamilySpec(const FamilySpec& spec);

FiniteStructure GenerateStructure(FamilyKind kind, Element size,
                                  const std::map<std::string, Element>& constants = {});
Family Generate(const FamilySpec& spec);

// Sizes lo..hi of `kind`, skipping odd sizes for the two-colour kinds.
FamilySpec RangeSpec(FamilyKind kind, Element lo, Element hi,
                     std::map<std::string, Element> constants = {});

}  // namespace malg

#endif  // MALG_CORPUS_CORPUS_H_
