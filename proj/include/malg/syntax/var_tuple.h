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

#ifndef MALG_SYNTAX_VAR_TUPLE_H_
#define MALG_SYNTAX_VAR_TUPLE_H_

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace malg {

// Ordered, duplicate-free list of variable names. Construction throws
// Error(kInvalidArgument) on a repeated name.
class VarTuple {
 public:
  VarTuple() = default;
  VarTuple(std::initializer_list<std::string> vars);
  explicit VarTuple(std::vector<std::string> vars);

  // Splits on whitespace: "x y z".
  static VarTuple Parse(std::string_view text);

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  const std::string& operator[](std::size_t i) const { return vars_[i]; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }
  const std::vector<std::string>& names() const { return vars_; }

  bool contains(std::string_view var) const;
  std::set<std::string> range() const { return {vars_.begin(), vars_.end()}; }

  // Concatenation; throws if the parts overlap.
  VarTuple operator+(const VarTuple& other) const;
  // Order-preserving removal of `other`'s variables.
  VarTuple without(const VarTuple& other) const;

  friend bool operator==(const VarTuple&, const VarTuple&) = default;

 private:
  std::vector<std::string> vars_;
};

std::string ToString(const VarTuple& vars);

}  // namespace malg

#endif  // MALG_SYNTAX_VAR_TUPLE_H_
