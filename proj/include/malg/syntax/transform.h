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

#ifndef MALG_SYNTAX_TRANSFORM_H_
#define MALG_SYNTAX_TRANSFORM_H_

#include <map>
#include <set>
#include <string>

#include "malg/syntax/formula.h"

namespace malg {

// Deterministic fresh-variable supply. Names are `<root>_<k>` with the
// smallest k not yet used, where root is the requested base with any
// trailing `_<digits>` removed.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::set<std::string> used) : used_(std::move(used)) {}

  void Reserve(const std::string& name) { used_.insert(name); }
  void Reserve(const Formula& f);

  std::string Fresh(const std::string& base);
  VarTuple FreshCopy(const VarTuple& vars);

 private:
  std::set<std::string> used_;
  std::map<std::string, unsigned> next_;
};

// Replaces free occurrences of variables by element literals or constants.
// Throws Error(kBoundVariable) when a key is not free in `f` but is bound
// somewhere inside it, and Error(kInvalidArgument) for variable targets.
Formula Substitute(const Formula& f, const std::map<std::string, Term>& sigma);

// Renames free variables to other variables, renaming bound variables
// where needed so that no target name is captured.
Formula RenameFree(const Formula& f, const std::map<std::string, std::string>& renaming);

// RenameFree with the pointwise map from[i] -> to[i].
Formula Instantiate(const Formula& f, const VarTuple& from, const VarTuple& to);

// Replaces every counting quantifier by plain first-order quantifiers over
// fresh copies of the counted tuple with pairwise distinctness:
//   E[>=0] x.phi -> true,  E[>=1] x.phi -> E x.phi,
//   E[>=r] x.phi -> E x1..xr.(phi(x1) & .. & phi(xr) & pairwise x_i != x_j),
//   E[<=r] x.phi -> !E[>=r+1] x.phi,  E[=r] -> E[>=r] & E[<=r].
Formula ExpandCounting(const Formula& f);

}  // namespace malg

#endif  // MALG_SYNTAX_TRANSFORM_H_
