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

#ifndef MALG_SYNTAX_TERM_H_
#define MALG_SYNTAX_TERM_H_

#include <compare>
#include <cstdint>
#include <string>

namespace malg {

// Universe elements are 0..n-1.
using Element = std::uint32_t;

enum class TermKind : std::uint8_t { kVariable, kElement, kConstant };

// A variable, an element literal (#k) or a named constant (@c).
class Term {
 public:
  static Term Var(std::string name);
  static Term Literal(Element element);
  static Term Constant(std::string name);

  TermKind kind() const { return kind_; }
  bool is_variable() const { return kind_ == TermKind::kVariable; }

  // Variable or constant name; empty for literals.
  const std::string& name() const { return name_; }
  Element element() const { return element_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string name, Element element)
      : kind_(kind), name_(std::move(name)), element_(element) {}

  TermKind kind_;
  std::string name_;
  Element element_;
};

std::string ToString(const Term& term);

}  // namespace malg

#endif  // MALG_SYNTAX_TERM_H_
