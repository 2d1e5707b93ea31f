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

#ifndef MALG_SYNTAX_PARSER_H_
#define MALG_SYNTAX_PARSER_H_

#include <string_view>

#include "malg/syntax/formula.h"
#include "malg/syntax/signature.h"

namespace malg {

// Parses the ASCII formula grammar:
//
//   phi  ::= "true" | "false" | atom | "!" phi | "(" phi ")"
//          | phi "&" phi | phi "|" phi | phi "->" phi | phi "<->" phi
//          | "E" vars "." phi | "A" vars "." phi
//          | "E[>=" INT "]" vars "." phi | "E[<=" INT "]" vars "." phi
//          | "E[=" INT "]" vars "." phi
//   atom ::= IDENT "(" term ("," term)* ")" | term "=" term
//   term ::= VAR | "#" INT | "@" IDENT
//
// Precedence from tightest: ! & | -> <->. Quantifier bodies extend as far
// right as possible. & and | are n-ary and left associative, -> is right
// associative and <-> left associative. "E", "A", "true" and "false" cannot
// be used as variable names.
//
// Throws ParseError with kSyntax, kUnknownSymbol or kArityMismatch.
Formula Parse(std::string_view text, const Signature& sig);

bool IsReservedWord(std::string_view word);

}  // namespace malg

#endif  // MALG_SYNTAX_PARSER_H_
