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

#include "malg/corpus/corpus.h"

#include "malg/error.h"

namespace malg {

namespace {

bool TwoColour(FamilyKind kind) {
  return kind == FamilyKind::kMatching || kind == FamilyKind::kCompleteBipartite;
}

}  // namespace

std::string_view FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kDirectedCycle: return "directed-cycle";
    case FamilyKind::kUndirectedCycle: return "undirected-cycle";
    case FamilyKind::kSuccessorChain: return "successor-chain";
    case FamilyKind::kPureSet: return "pure-set-with-constants";
    case FamilyKind::kMatching: return "perfect-matching-two-colors";
    case FamilyKind::kCompleteBipartite: return "complete-bipartite";
  }
  return "unknown";
}

std::optional<FamilyKind> ParseFamilyKind(std::string_view name) {
  static const std::map<std::string_view, FamilyKind> kNames = {
      {"directed-cycle", FamilyKind::kDirectedCycle},
      {"dcycle", FamilyKind::kDirectedCycle},
      {"undirected-cycle", FamilyKind::kUndirectedCycle},
      {"cycle", FamilyKind::kUndirectedCycle},
      {"successor-chain", FamilyKind::kSuccessorChain},
      {"chain", FamilyKind::kSuccessorChain},
      {"pure-set-with-constants", FamilyKind::kPureSet},
      {"pureset", FamilyKind::kPureSet},
      {"perfect-matching-two-colors", FamilyKind::kMatching},
      {"matching", FamilyKind::kMatching},
      {"complete-bipartite", FamilyKind::kCompleteBipartite},
      {"bipartite", FamilyKind::kCompleteBipartite},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

void ValidateFamilySpec(const FamilySpec& spec) {
  if (spec.sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "family has no sizes");
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    Element n = spec.sizes[i];
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "sizes must be positive");
    if (i > 0 && n <= spec.sizes[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "sizes must be strictly increasing");
    }
    if (TwoColour(spec.kind) && n % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument, std::string(FamilyKindName(spec.kind)) +
                                                   " needs even sizes, got " + std::to_string(n));
    }
  }
  for (const auto& [name, e] : spec.constants) {
    if (e >= spec.sizes.front()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constant '" + name + "' = " + std::to_string(e) + " not below the smallest size");
    }
  }
}

FiniteStructure GenerateStructure(FamilyKind kind, Element n,
                                  const std::map<std::string, Element>& constants) {
  ValidateFamilySpec({kind, {n}, constants});
  std::map<std::string, std::pair<std::size_t, std::vector<std::vector<Element>>>> rels;
  switch (kind) {
    case FamilyKind::kDirectedCycle: {
      auto& e = rels["E"] = {2, {}};
      for (Element i = 0; i < n; ++i) e.second.push_back({i, (i + 1) % n});
      break;
    }
    case FamilyKind::kUndirectedCycle: {
      auto& e = rels["E"] = {2, {}};
      for (Element i = 0; i < n; ++i) {
        e.second.push_back({i, (i + 1) % n});
        e.second.push_back({(i + 1) % n, i});
      }
      break;
    }
    case FamilyKind::kSuccessorChain: {
      auto& s = rels["S"] = {2, {}};
      for (Element i = 0; i + 1 < n; ++i) s.second.push_back({i, i + 1});
      break;
    }
    case FamilyKind::kPureSet:
      break;
    case FamilyKind::kMatching: {
      Element k = n / 2;
      auto& u = rels["U"] = {1, {}};
      auto& b = rels["B"] = {2, {}};
      for (Element i = 0; i < k; ++i) {
        u.second.push_back({i});
        b.second.push_back({i, k + i});
      }
      break;
    }
    case FamilyKind::kCompleteBipartite: {
      Element k = n / 2;
      auto& e = rels["E"] = {2, {}};
      for (Element i = 0; i < k; ++i) {
        for (Element j = k; j < n; ++j) {
          e.second.push_back({i, j});
          e.second.push_back({j, i});
        }
      }
      break;
    }
  }
  std::string id = std::string(FamilyKindName(kind)) + "-" + std::to_string(n);
  return FiniteStructure::Build(n, rels, constants, id);
}

Family Generate(const FamilySpec& spec) {
  ValidateFamilySpec(spec);
  Family out;
  for (Element n : spec.sizes) out.push_back(GenerateStructure(spec.kind, n, spec.constants));
  return out;
}

FamilySpec RangeSpec(FamilyKind kind, Element lo, Element hi,
                     std::map<std::string, Element> constants) {
  FamilySpec spec{kind, {}, std::move(constants)};
  for (Element n = lo; n <= hi; ++n) {
    if (TwoColour(kind) && n % 2 != 0) continue;
    spec.sizes.push_back(n);
  }
  return spec;
}

}  // namespace malg
