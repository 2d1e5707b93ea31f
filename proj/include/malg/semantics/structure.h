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

#ifndef MALG_SEMANTICS_STRUCTURE_H_
#define MALG_SEMANTICS_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "malg/syntax/signature.h"
#include "malg/syntax/term.h"

namespace malg {

// A relation over {0..n-1}: sorted duplicate-free tuples plus a dense
// membership bitmap when n^arity is small enough.
class Relation {
 public:
  Relation(std::size_t arity, std::vector<std::vector<Element>> tuples, Element universe);

  std::size_t arity() const { return arity_; }
  const std::vector<std::vector<Element>>& tuples() const { return tuples_; }
  bool contains(std::span<const Element> tuple) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.tuples_ == b.tuples_;
  }

 private:
  std::size_t arity_;
  std::vector<std::vector<Element>> tuples_;
  Element universe_;
  std::vector<std::uint64_t> dense_;
};

// A finite structure with universe {0..n-1}, named relations and named
// constants. Immutable after construction; the `id` labels the structure in
// reports and is ignored by equality.
class FiniteStructure {
 public:
  // Throws Error(kSchema) when a tuple entry or constant is out of range or
  // a tuple has the wrong length.
  FiniteStructure(Element universe, std::map<std::string, Relation> relations,
                  std::map<std::string, Element> constants, std::string id = "");

  // Convenience builder from plain tuple lists.
  static FiniteStructure Build(Element universe,
                               const std::map<std::string, std::pair<std::size_t,
                                   std::vector<std::vector<Element>>>>& relations,
                               std::map<std::string, Element> constants = {},
                               std::string id = "");

  Element size() const { return universe_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }
  const std::map<std::string, Element>& constants() const { return constants_; }
  const Relation* relation(const std::string& name) const;
  const std::string& id() const { return id_; }

  Signature signature() const;

  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    return a.universe_ == b.universe_ && a.relations_ == b.relations_ &&
           a.constants_ == b.constants_;
  }

 private:
  Element universe_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, Element> constants_;
  std::string id_;
};

using Family = std::vector<FiniteStructure>;

}  // namespace malg

#endif  // MALG_SEMANTICS_STRUCTURE_H_
