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

#ifndef MALG_SYNTAX_PRINTER_H_
#define MALG_SYNTAX_PRINTER_H_

#include <ostream>
#include <string>

#include "malg/syntax/formula.h"

namespace malg {

// Renders a formula in the grammar accepted by Parse, with the minimum
// parentheses needed for Parse to rebuild the same tree.
std::string Print(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace malg

#endif  // MALG_SYNTAX_PRINTER_H_
