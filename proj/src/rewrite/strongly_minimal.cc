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

#include "malg/rewrite/strongly_minimal.h"

#include <set>

#include "element_names.h"
#include "malg/error.h"
#include "malg/syntax/printer.h"

namespace malg {

namespace {

std::set<Element> SolutionElements(const FiniteStructure& m, const Formula& phi,
                                   const std::string& y) {
  std::set<Element> out;
  for (const auto& t : Solutions(m, phi, VarTuple{y}).tuples) out.insert(t[0]);
  return out;
}

std::set<Element> Complement(const std::set<Element>& s, Element n) {
  std::set<Element> out;
  for (Element e = 0; e < n; ++e) {
    if (!s.contains(e)) out.insert(e);
  }
  return out;
}

}  // namespace

StronglyMinimalRewrite RewriteStronglyMinimal(const Family& family, const Formula& phi,
                                              const std::string& y, std::size_t suffix) {
  for (const auto& v : phi.free_vars()) {
    if (v != y) {
      throw Error(ErrorCode::kFreeVariableMismatch,
                  "formula has free variable '" + v + "' besides '" + y + "'");
    }
  }
  if (suffix == 0 || family.size() < suffix) {
    throw Error(ErrorCode::kNotStable, "family has fewer than " + std::to_string(suffix) +
                                           " cutouts");
  }
  std::vector<std::set<Element>> sols, comps;
  for (const auto& m : family) {
    sols.push_back(SolutionElements(m, phi, y));
    comps.push_back(Complement(sols.back(), m.size()));
  }
  std::size_t first = family.size() - suffix;
  auto settles = [&](const std::vector<std::set<Element>>& sets) {
    for (std::size_t i = first + 1; i < sets.size(); ++i) {
      if (sets[i] != sets[first]) return false;
    }
    return true;
  };
  bool cofinite = false;
  std::vector<Term> q_terms;
  const std::vector<std::set<Element>>* pattern = nullptr;
  if (settles(sols)) {
    pattern = &sols;
  } else if (settles(comps)) {
    pattern = &comps;
    cofinite = true;
  } else {
    throw Error(ErrorCode::kNotStable,
                "solution sets of " + Print(phi) + " are neither finite nor cofinite on the family");
  }
  const std::set<Element>& q = pattern->back();
  std::size_t start = family.size() - 1;
  while (start > 0 && (*pattern)[start - 1] == q) --start;

  std::vector<Formula> eqs;
  for (Element e : q) {
    Term t = internal::NameElement(family, first, e);
    q_terms.push_back(t);
    eqs.push_back(Formula::Eq(Term::Var(y), t));
  }
  Formula theta = eqs.empty() ? Formula::Not(Formula::VarEq(y, y)) : Formula::Or(eqs);
  Formula output = cofinite ? Formula::Not(theta) : theta;
  if (cofinite && eqs.empty()) output = Formula::VarEq(y, y);
  std::vector<TraceStep> trace{{"strongly-minimal-input", phi},
                               {cofinite ? "cofinite" : "finite", output}};
  return {Finish(output, {}, family[start].size(), std::move(trace)), cofinite,
          std::move(q_terms)};
}

}  // namespace malg
