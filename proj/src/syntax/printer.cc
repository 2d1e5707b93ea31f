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

#include "malg/syntax/printer.h"

namespace malg {

namespace {

// Binding strength; quantifiers extend to the right and bind loosest.
int Precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount: return 0;
    case FormulaKind::kIff: return 1;
    case FormulaKind::kImplies: return 2;
    case FormulaKind::kOr: return 3;
    case FormulaKind::kAnd: return 4;
    case FormulaKind::kNot: return 5;
    default: return 6;
  }
}

void PrintTo(const Formula& f, std::string& out);

void PrintWrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  PrintTo(f, out);
  if (wrap) out += ')';
}

void PrintQuantifierHead(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::kExists: out += "E"; break;
    case FormulaKind::kForall: out += "A"; break;
    default:
      out += "E[";
      out += f.count_mode() == CountMode::kAtLeast  ? ">="
             : f.count_mode() == CountMode::kAtMost ? "<="
                                                    : "=";
      out += std::to_string(f.count());
      out += "]";
  }
  for (const auto& v : f.bound()) {
    out += ' ';
    out += v;
  }
  out += " . ";
}

void PrintTo(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::kTrue: out += "true"; return;
    case FormulaKind::kFalse: out += "false"; return;
    case FormulaKind::kAtom: {
      out += f.relation();
      out += '(';
      bool first = true;
      for (const auto& t : f.terms()) {
        if (!first) out += ',';
        first = false;
        out += ToString(t);
      }
      out += ')';
      return;
    }
    case FormulaKind::kEq:
      out += ToString(f.terms()[0]);
      out += " = ";
      out += ToString(f.terms()[1]);
      return;
    case FormulaKind::kNot: {
      const Formula& c = f.body();
      bool bare = c.kind() == FormulaKind::kAtom || c.kind() == FormulaKind::kTrue ||
                  c.kind() == FormulaKind::kFalse || c.kind() == FormulaKind::kNot;
      out += '!';
      PrintWrapped(c, !bare, out);
      return;
    }
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      int p = Precedence(f);
      const char* op = f.kind() == FormulaKind::kAnd ? " & " : " | ";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += op;
        first = false;
        PrintWrapped(c, Precedence(c) <= p, out);
      }
      return;
    }
    case FormulaKind::kImplies:
      PrintWrapped(f.child(0), Precedence(f.child(0)) <= 2, out);
      out += " -> ";
      PrintWrapped(f.child(1), Precedence(f.child(1)) < 2, out);
      return;
    case FormulaKind::kIff:
      PrintWrapped(f.child(0), Precedence(f.child(0)) < 1, out);
      out += " <-> ";
      PrintWrapped(f.child(1), Precedence(f.child(1)) <= 1, out);
      return;
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount:
      PrintQuantifierHead(f, out);
      PrintTo(f.body(), out);
      return;
  }
}

}  // namespace

std::string Print(const Formula& f) {
  std::string out;
  PrintTo(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << Print(f); }

}  // namespace malg
