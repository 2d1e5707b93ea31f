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

#include "malg/semantics/structure.h"

#include <algorithm>

#include "malg/error.h"

namespace malg {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// n^arity, or kDenseLimit if that is exceeded.
std::uint64_t CappedPower(Element n, std::size_t arity) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    v *= n;
    if (v >= kDenseLimit) return kDenseLimit;
  }
  return v;
}

}  // namespace

Relation::Relation(std::size_t arity, std::vector<std::vector<Element>> tuples, Element universe)
    : arity_(arity), tuples_(std::move(tuples)), universe_(universe) {
  if (arity_ == 0) throw Error(ErrorCode::kSchema, "relation arity must be positive");
  for (const auto& t : tuples_) {
    if (t.size() != arity_) {
      throw Error(ErrorCode::kSchema, "tuple length " + std::to_string(t.size()) +
                                          " does not match arity " + std::to_string(arity_));
    }
    for (Element e : t) {
      if (e >= universe_) {
        throw Error(ErrorCode::kSchema, "tuple entry " + std::to_string(e) +
                                            " outside universe of size " +
                                            std::to_string(universe_));
      }
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  std::uint64_t cells = CappedPower(universe_, arity_);
  if (cells < kDenseLimit) {
    dense_.assign((cells + 63) / 64, 0);
    for (const auto& t : tuples_) {
      std::uint64_t idx = 0;
      for (Element e : t) idx = idx * universe_ + e;
      dense_[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
}

bool Relation::contains(std::span<const Element> tuple) const {
  if (!dense_.empty()) {
    std::uint64_t idx = 0;
    for (Element e : tuple) idx = idx * universe_ + e;
    return (dense_[idx / 64] >> (idx % 64)) & 1u;
  }
  if (universe_ == 0) return false;
  return std::binary_search(tuples_.begin(), tuples_.end(), tuple,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                  b.end());
                            });
}

FiniteStructure::FiniteStructure(Element universe, std::map<std::string, Relation> relations,
                                 std::map<std::string, Element> constants, std::string id)
    : universe_(universe),
      relations_(std::move(relations)),
      constants_(std::move(constants)),
      id_(std::move(id)) {
  for (const auto& [name, e] : constants_) {
    if (e >= universe_) {
      throw Error(ErrorCode::kSchema, "constant '" + name + "' = " + std::to_string(e) +
                                          " outside universe of size " +
                                          std::to_string(universe_));
    }
    if (relations_.contains(name)) {
      throw Error(ErrorCode::kSchema, "'" + name + "' names both a relation and a constant");
    }
  }
}

FiniteStructure FiniteStructure::Build(
    Element universe,
    const std::map<std::string, std::pair<std::size_t, std::vector<std::vector<Element>>>>&
        relations,
    std::map<std::string, Element> constants, std::string id) {
  std::map<std::string, Relation> rels;
  for (const auto& [name, spec] : relations) {
    rels.emplace(name, Relation(spec.first, spec.second, universe));
  }
  return FiniteStructure(universe, std::move(rels), std::move(constants), std::move(id));
}

const Relation* FiniteStructure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

Signature FiniteStructure::signature() const {
  Signature sig;
  for (const auto& [name, rel] : relations_) sig.AddRelation(name, rel.arity());
  for (const auto& [name, e] : constants_) sig.AddConstant(name);
  return sig;
}

}  // namespace malg
