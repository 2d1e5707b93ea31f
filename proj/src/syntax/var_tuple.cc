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

#include "malg/syntax/var_tuple.h"

#include <algorithm>
#include <sstream>

#include "malg/error.h"

namespace malg {

VarTuple::VarTuple(std::initializer_list<std::string> vars)
    : VarTuple(std::vector<std::string>(vars)) {}

VarTuple::VarTuple(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string_view> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error(ErrorCode::kInvalidArgument, "empty variable name");
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated variable '" + v + "' in tuple");
    }
  }
}

VarTuple VarTuple::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> vars;
  for (std::string v; in >> v;) vars.push_back(v);
  return VarTuple(std::move(vars));
}

bool VarTuple::contains(std::string_view var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

VarTuple VarTuple::operator+(const VarTuple& other) const {
  std::vector<std::string> all = vars_;
  all.insert(all.end(), other.vars_.begin(), other.vars_.end());
  return VarTuple(std::move(all));
}

VarTuple VarTuple::without(const VarTuple& other) const {
  std::vector<std::string> kept;
  for (const auto& v : vars_) {
    if (!other.contains(v)) kept.push_back(v);
  }
  return VarTuple(std::move(kept));
}

std::string ToString(const VarTuple& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ",";
    out += vars[i];
  }
  return out + ")";
}

}  // namespace malg
