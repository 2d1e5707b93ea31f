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

#ifndef MALG_SYNTAX_SIGNATURE_H_
#define MALG_SYNTAX_SIGNATURE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace malg {

// Relation symbols with positive arities plus constant names. A name may
// not be used for both a relation and a constant.
class Signature {
 public:
  Signature() = default;

  Signature& AddRelation(const std::string& name, std::size_t arity);
  Signature& AddConstant(const std::string& name);

  std::optional<std::size_t> arity(const std::string& relation) const;
  bool has_constant(const std::string& name) const { return constants_.contains(name); }

  const std::map<std::string, std::size_t>& relations() const { return relations_; }
  const std::set<std::string>& constants() const { return constants_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> relations_;
  std::set<std::string> constants_;
};

}  // namespace malg

#endif  // MALG_SYNTAX_SIGNATURE_H_
