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

#include "testing/naive.h"

#include <algorithm>
#include <stdexcept>

namespace malg::testing {

namespace {

Element TermValue(const FiniteStructure& m, const Term& t,
                  const std::map<std::string, Element>& alpha) {
  switch (t.kind()) {
    case TermKind::kVariable:
      return alpha.at(t.name());
    case TermKind::kElement:
      return t.element();
    case TermKind::kConstant:
      return m.constants().at(t.name());
  }
  throw std::logic_error("bad term");
}

// Calls f for every assignment extending alpha on `vars`; stops when f
// returns false.
template <typename F>
bool Loop(const FiniteStructure& m, const VarTuple& vars, std::size_t i,
          std::map<std::string, Element>& alpha, F&& f) {
  if (i == vars.size()) return f(alpha);
  for (Element e = 0; e < m.size(); ++e) {
    alpha[vars[i]] = e;
    if (!Loop(m, vars, i + 1, alpha, f)) return false;
  }
  return true;
}

}  // namespace

bool NaiveEval(const FiniteStructure& m, const Formula& f, std::map<std::string, Element> alpha) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return true;
    case FormulaKind::kFalse:
      return false;
    case FormulaKind::kAtom: {
      std::vector<Element> t;
      for (const Term& x : f.terms()) t.push_back(TermValue(m, x, alpha));
      const auto& tuples = m.relation(f.relation())->tuples();
      return std::find(tuples.begin(), tuples.end(), t) != tuples.end();
    }
    case FormulaKind::kEq:
      return TermValue(m, f.terms()[0], alpha) == TermValue(m, f.terms()[1], alpha);
    case FormulaKind::kNot:
      return !NaiveEval(m, f.body(), alpha);
    case FormulaKind::kAnd:
      for (const Formula& c : f.children()) {
        if (!NaiveEval(m, c, alpha)) return false;
      }
      return true;
    case FormulaKind::kOr:
      for (const Formula& c : f.children()) {
        if (NaiveEval(m, c, alpha)) return true;
      }
      return false;
    case FormulaKind::kImplies:
      return !NaiveEval(m, f.child(0), alpha) || NaiveEval(m, f.child(1), alpha);
    case FormulaKind::kIff:
      return NaiveEval(m, f.child(0), alpha) == NaiveEval(m, f.child(1), alpha);
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount: {
      std::uint64_t count = NaiveCount(m, f.body(), f.bound(), alpha);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < f.bound().size(); ++i) total *= m.size();
      if (f.kind() == FormulaKind::kExists) return count > 0;
      if (f.kind() == FormulaKind::kForall) return count == total;
      switch (f.count_mode()) {
        case CountMode::kAtLeast:
          return count >= f.count();
        case CountMode::kAtMost:
          return count <= f.count();
        case CountMode::kExactly:
          return count == f.count();
      }
    }
  }
  throw std::logic_error("bad formula");
}

std::uint64_t NaiveCount(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                         const std::map<std::string, Element>& alpha) {
  std::map<std::string, Element> a = alpha;
  std::uint64_t count = 0;
  Loop(m, vars, 0, a, [&](const std::map<std::string, Element>& full) {
    if (NaiveEval(m, f, full)) ++count;
    return true;
  });
  return count;
}

std::uint64_t NaiveMaBound(const FiniteStructure& m, const Formula& f, const VarTuple& z) {
  const std::size_t k = z.size();
  if (k <= 1) return 0;
  std::uint64_t best = 0;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? xs : ys).push_back(z[i]);
    VarTuple x(xs), y(ys);
    std::map<std::string, Element> a;
    Loop(m, y, 0, a, [&](const std::map<std::string, Element>& ya) {
      best = std::max(best, NaiveCount(m, f, x, ya));
      return true;
    });
  }
  return best;
}

}  // namespace malg::testing
