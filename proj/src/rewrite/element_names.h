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

#ifndef MALG_REWRITE_ELEMENT_NAMES_H_
#define MALG_REWRITE_ELEMENT_NAMES_H_

#include "malg/semantics/structure.h"
#include "malg/syntax/term.h"

namespace malg::internal {

// @c when constant c denotes `e` on every cutout from `first` on, else #e.
inline Term NameElement(const Family& family, std::size_t first, Element e) {
  for (const auto& [name, value] : family[first].constants()) {
    if (value != e) continue;
    bool everywhere = true;
    for (std::size_t i = first; i < family.size() && everywhere; ++i) {
      auto it = family[i].constants().find(name);
      everywhere = it != family[i].constants().end() && it->second == e;
    }
    if (everywhere) return Term::Constant(name);
  }
  return Term::Literal(e);
}

}  // namespace malg::internal

#endif  // MALG_REWRITE_ELEMENT_NAMES_H_
