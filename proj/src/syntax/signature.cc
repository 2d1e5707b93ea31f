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

#include "malg/syntax/signature.h"

#include "malg/error.h"

namespace malg {

Signature& Signature::AddRelation(const std::string& name, std::size_t arity) {
  if (arity == 0) {
    throw Error(ErrorCode::kInvalidArgument, "relation '" + name + "' must have positive arity");
  }
  if (constants_.contains(name)) {
    throw Error(ErrorCode::kInvalidArgument, "'" + name + "' is already a constant");
  }
  auto [it, inserted] = relations_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw Error(ErrorCode::kInvalidArgument, "relation '" + name + "' redeclared with new arity");
  }
  return *this;
}

Signature& Signature::AddConstant(const std::string& name) {
  if (relations_.contains(name)) {
    throw Error(ErrorCode::kInvalidArgument, "'" + name + "' is already a relation");
  }
  constants_.insert(name);
  return *this;
}

std::optional<std::size_t> Signature::arity(const std::string& relation) const {
  auto it = relations_.find(relation);
  if (it == relations_.end()) return std::nullopt;
  return it->second;
}

}  // namespace malg
