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

#ifndef MALG_SRC_SYNTAX_LEXER_H_
#define MALG_SRC_SYNTAX_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace malg::internal {

enum class Tok {
  kIdent,
  kInt,
  kHash,
  kAt,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kDot,
  kEq,
  kGe,
  kLe,
  kBang,
  kAmp,
  kPipe,
  kArrow,
  kIffArrow,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

// Throws ParseError on an unexpected character.
std::vector<Token> Tokenize(std::string_view text);

std::string_view TokName(Tok kind);

}  // namespace malg::internal

#endif  // MALG_SRC_SYNTAX_LEXER_H_
