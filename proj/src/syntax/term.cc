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

#include "malg/syntax/term.h"

namespace malg {

Term Term::Var(std::string name) {
  return Term(TermKind::kVariable, std::move(name), 0);
}

Term Term::Literal(Element element) {
  return Term(TermKind::kElement, std::string(), element);
}

Term Term::Constant(std::string name) {
  return Term(TermKind::kConstant, std::move(name), 0);
}

std::string ToString(const Term& term) {
  switch (term.kind()) {
    case TermKind::kVariable: return term.name();
    case TermKind::kElement: return "#" + std::to_string(term.element());
    case TermKind::kConstant: return "@" + term.name();
  }
  return {};
}

}  // namespace malg
