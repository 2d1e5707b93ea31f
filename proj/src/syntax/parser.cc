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

#include "malg/syntax/parser.h"

#include <limits>
#include <string>
#include <vector>

#include "lexer.h"
#include "malg/error.h"

namespace malg {

namespace {

using internal::Tok;
using internal::Token;

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig)
      : tokens_(internal::Tokenize(text)), sig_(sig) {}

  Formula ParseAll() {
    Formula f = ParseIff();
    if (Peek().kind != Tok::kEnd) Fail("expected end of input, found '" + Peek().text + "'");
    return f;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    Next();
    return true;
  }
  const Token& Expect(Tok kind) {
    if (Peek().kind != kind) {
      Fail("expected " + std::string(internal::TokName(kind)) + ", found " +
           (Peek().kind == Tok::kEnd ? std::string("end of input") : "'" + Peek().text + "'"));
    }
    return Next();
  }
  [[noreturn]] void Fail(const std::string& message, ErrorCode code = ErrorCode::kSyntax) const {
    throw ParseError(code, Peek().pos, message);
  }

  Formula ParseIff() {
    Formula lhs = ParseImplies();
    while (Accept(Tok::kIffArrow)) lhs = Formula::Iff(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Accept(Tok::kArrow)) return Formula::Implies(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseOr() {
    std::vector<Formula> parts{ParseAnd()};
    while (Accept(Tok::kPipe)) parts.push_back(ParseAnd());
    return Formula::Or(std::move(parts));
  }

  Formula ParseAnd() {
    std::vector<Formula> parts{ParseUnary()};
    while (Accept(Tok::kAmp)) parts.push_back(ParseUnary());
    return Formula::And(std::move(parts));
  }

  Formula ParseUnary() {
    if (Accept(Tok::kBang)) return Formula::Not(ParseUnary());
    const Token& t = Peek();
    if (t.kind == Tok::kIdent && (t.text == "E" || t.text == "A") &&
        Peek(1).kind != Tok::kLParen) {
      return ParseQuantifier();
    }
    return ParsePrimary();
  }

  Formula ParseQuantifier() {
    const Token& head = Next();
    bool counting = false;
    CountMode mode = CountMode::kAtLeast;
    std::uint32_t r = 0;
    if (head.text == "E" && Accept(Tok::kLBracket)) {
      counting = true;
      if (Accept(Tok::kGe)) {
        mode = CountMode::kAtLeast;
      } else if (Accept(Tok::kLe)) {
        mode = CountMode::kAtMost;
      } else if (Accept(Tok::kEq)) {
        mode = CountMode::kExactly;
      } else {
        Fail("expected '>=', '<=' or '=' in counting quantifier");
      }
      r = ParseInt();
      Expect(Tok::kRBracket);
    }
    std::size_t vars_pos = Peek().pos;
    std::vector<std::string> names;
    while (Peek().kind == Tok::kIdent) {
      if (IsReservedWord(Peek().text)) Fail("'" + Peek().text + "' cannot be a variable");
      names.push_back(Next().text);
    }
    if (names.empty()) Fail("expected at least one bound variable");
    Expect(Tok::kDot);
    VarTuple vars;
    try {
      vars = VarTuple(std::move(names));
    } catch (const Error& e) {
      throw ParseError(ErrorCode::kSyntax, vars_pos, e.what());
    }
    Formula body = ParseIff();
    if (counting) return Formula::Count(mode, r, std::move(vars), std::move(body));
    if (head.text == "E") return Formula::Exists(std::move(vars), std::move(body));
    return Formula::Forall(std::move(vars), std::move(body));
  }

  Formula ParsePrimary() {
    const Token& t = Peek();
    if (t.kind == Tok::kLParen) {
      Next();
      Formula f = ParseIff();
      Expect(Tok::kRParen);
      return f;
    }
    if (t.kind == Tok::kIdent && t.text == "true") {
      Next();
      return Formula::True();
    }
    if (t.kind == Tok::kIdent && t.text == "false") {
      Next();
      return Formula::False();
    }
    if (t.kind == Tok::kIdent && Peek(1).kind == Tok::kLParen) return ParseAtom();
    Term lhs = ParseTerm();
    Expect(Tok::kEq);
    Term rhs = ParseTerm();
    return Formula::Eq(std::move(lhs), std::move(rhs));
  }

  Formula ParseAtom() {
    const Token& name = Next();
    Expect(Tok::kLParen);
    std::vector<Term> terms{ParseTerm()};
    while (Accept(Tok::kComma)) terms.push_back(ParseTerm());
    auto arity = sig_.arity(name.text);
    if (!arity) {
      throw ParseError(ErrorCode::kUnknownSymbol, name.pos,
                       "unknown relation '" + name.text + "'");
    }
    if (*arity != terms.size()) {
      throw ParseError(ErrorCode::kArityMismatch, name.pos,
                       "relation '" + name.text + "' has arity " + std::to_string(*arity) +
                           " but is applied to " + std::to_string(terms.size()) + " terms");
    }
    Expect(Tok::kRParen);
    return Formula::Atom(name.text, std::move(terms));
  }

  Term ParseTerm() {
    if (Accept(Tok::kHash)) return Term::Literal(ParseInt());
    if (Accept(Tok::kAt)) {
      const Token& name = Expect(Tok::kIdent);
      if (!sig_.has_constant(name.text)) {
        throw ParseError(ErrorCode::kUnknownSymbol, name.pos,
                         "unknown constant '" + name.text + "'");
      }
      return Term::Constant(name.text);
    }
    if (Peek().kind != Tok::kIdent) Fail("expected a term");
    if (IsReservedWord(Peek().text)) Fail("'" + Peek().text + "' cannot be a variable");
    return Term::Var(Next().text);
  }

  std::uint32_t ParseInt() {
    const Token& t = Expect(Tok::kInt);
    unsigned long long v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(ErrorCode::kSyntax, t.pos, "integer out of range");
      }
    }
    return static_cast<std::uint32_t>(v);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace

Formula Parse(std::string_view text, const Signature& sig) {
  return Parser(text, sig).ParseAll();
}

bool IsReservedWord(std::string_view word) {
  return word == "E" || word == "A" || word == "true" || word == "false";
}

}  // namespace malg
