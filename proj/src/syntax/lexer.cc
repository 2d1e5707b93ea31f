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

#include "lexer.h"

#include <cctype>

#include "malg/error.h"

namespace malg::internal {

namespace {

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto emit = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), i});
    i += len;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (IsIdentStart(c)) {
      std::size_t j = i;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      emit(Tok::kIdent, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      emit(Tok::kInt, j - i);
      continue;
    }
    std::string_view rest = text.substr(i);
    if (rest.starts_with("<->")) { emit(Tok::kIffArrow, 3); continue; }
    if (rest.starts_with("->")) { emit(Tok::kArrow, 2); continue; }
    if (rest.starts_with(">=")) { emit(Tok::kGe, 2); continue; }
    if (rest.starts_with("<=")) { emit(Tok::kLe, 2); continue; }
    switch (c) {
      case '#': emit(Tok::kHash, 1); continue;
      case '@': emit(Tok::kAt, 1); continue;
      case '(': emit(Tok::kLParen, 1); continue;
      case ')': emit(Tok::kRParen, 1); continue;
      case '[': emit(Tok::kLBracket, 1); continue;
      case ']': emit(Tok::kRBracket, 1); continue;
      case ',': emit(Tok::kComma, 1); continue;
      case '.': emit(Tok::kDot, 1); continue;
      case '=': emit(Tok::kEq, 1); continue;
      case '!': emit(Tok::kBang, 1); continue;
      case '&': emit(Tok::kAmp, 1); continue;
      case '|': emit(Tok::kPipe, 1); continue;
      default:
        throw ParseError(ErrorCode::kSyntax, i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

std::string_view TokName(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kHash: return "'#'";
    case Tok::kAt: return "'@'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kEq: return "'='";
    case Tok::kGe: return "'>='";
    case Tok::kLe: return "'<='";
    case Tok::kBang: return "'!'";
    case Tok::kAmp: return "'&'";
    case Tok::kPipe: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kIffArrow: return "'<->'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

}  // namespace malg::internal
