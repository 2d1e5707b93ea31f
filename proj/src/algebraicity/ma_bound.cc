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

#include "malg/algebraicity/ma_bound.h"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "malg/error.h"
#include "malg/semantics/evaluator.h"
#include "malg/syntax/printer.h"

namespace malg {

MABoundCertificate MaBound(const FiniteStructure& m, const Formula& f, const VarTuple& z) {
  for (const auto& v : f.free_vars()) {
    if (!z.contains(v)) {
      throw Error(ErrorCode::kFreeVariableMismatch,
                  "free variable '" + v + "' not among " + ToString(z));
    }
  }
  MABoundCertificate cert{.formula = f, .vars = z, .structure = m.id()};
  if (z.size() <= 1) {
    cert.vacuous = true;
    return cert;
  }
  SolutionSet sols = Solutions(m, f, z);
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < z.size(); ++i) pos[z[i]] = i;
  for (ProperPartition& p : ProperPartitions(z)) {
    std::map<std::vector<Element>, std::uint64_t> groups;
    std::uint64_t best = 0;
    for (const auto& t : sols.tuples) {
      std::vector<Element> key;
      key.reserve(p.y.size());
      for (const auto& v : p.y) key.push_back(t[pos[v]]);
      best = std::max(best, ++groups[key]);
    }
    cert.bound = std::max(cert.bound, best);
    cert.partitions.push_back({std::move(p), best});
  }
  return cert;
}

std::string FamilyStabilityReport::VerdictText() const {
  switch (verdict) {
    case Verdict::kStable:
      return "stable(" + std::to_string(stable_bound) + ")";
    case Verdict::kGrowing:
      return "growing";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

FamilyStabilityReport FamilyStability(const Family& family, const Formula& f, const VarTuple& z,
                                      std::size_t suffix) {
  if (family.empty()) throw Error(ErrorCode::kInvalidArgument, "empty family");
  if (suffix == 0) throw Error(ErrorCode::kInvalidConfig, "stability suffix must be positive");
  FamilyStabilityReport report;
  for (const auto& m : family) {
    MABoundCertificate c = MaBound(m, f, z);
    report.vacuous = c.vacuous;
    report.bounds.emplace_back(m.id(), c.bound);
  }
  if (report.bounds.size() < suffix) return report;
  auto first = report.bounds.end() - static_cast<long>(suffix);
  bool equal = true, nondecreasing = true;
  for (auto it = first + 1; it != report.bounds.end(); ++it) {
    equal = equal && it->second == first->second;
    nondecreasing = nondecreasing && it->second >= (it - 1)->second;
  }
  if (equal) {
    report.verdict = Verdict::kStable;
    report.stable_bound = first->second;
  } else if (nondecreasing) {
    report.verdict = Verdict::kGrowing;
  }
  return report;
}

std::uint64_t MaxSolutionCount(const Family& family, const Formula& f, const VarTuple& x) {
  std::vector<std::string> rest;
  for (const auto& v : f.free_vars()) {
    if (!x.contains(v)) rest.push_back(v);
  }
  VarTuple z = x + VarTuple(rest);
  std::size_t nx = x.size();
  std::uint64_t best = 0;
  for (const auto& m : family) {
    std::map<std::vector<Element>, std::uint64_t> groups;
    for (const auto& t : Solutions(m, f, z).tuples) {
      std::vector<Element> key(t.begin() + static_cast<long>(nx), t.end());
      best = std::max(best, ++groups[key]);
    }
  }
  return best;
}

FamilyStabilityReport CertifyKernel(const Family& family, const Formula& kernel,
                                    MaEvidence& evidence, std::size_t suffix) {
  if (!kernel.quantifier_free()) {
    throw Error(ErrorCode::kShape, "kernel must be quantifier-free: " + Print(kernel));
  }
  FamilyStabilityReport report =
      FamilyStability(family, kernel, VarTuple(kernel.free_vars()), suffix);
  if (report.verdict != Verdict::kGrowing) evidence.Add(kernel);
  return report;
}

namespace {

void CollectAtoms(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == FormulaKind::kAtom) {
    std::set<std::string> seen;
    for (const Term& t : f.terms()) {
      if (!t.is_variable() || !seen.insert(t.name()).second) return;
    }
    for (const Formula& g : out) {
      if (MatchesUpToRenaming(g, f)) return;
    }
    out.push_back(f);
    return;
  }
  for (const Formula& c : f.children()) CollectAtoms(c, out);
}

}  // namespace

MaEvidence CertifyAtoms(const Family& family, const Formula& f, std::size_t suffix) {
  std::vector<Formula> atoms;
  CollectAtoms(f, atoms);
  MaEvidence ev;
  for (const Formula& a : atoms) {
    if (family.front().relation(a.relation()) == nullptr) continue;
    CertifyKernel(family, a, ev, suffix);
  }
  return ev;
}

MaEvidence EvidenceOf(const MABoundCertificate& cert) {
  MaEvidence ev;
  if (cert.formula.quantifier_free()) ev.Add(cert.formula);
  return ev;
}

std::string CertificateToJsonText(const MABoundCertificate& cert) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : cert.partitions) {
    parts.push_back({{"x", p.partition.x.names()}, {"y", p.partition.y.names()}, {"max", p.max}});
  }
  nlohmann::json doc = {{"formula", Print(cert.formula)},
                        {"structure", cert.structure},
                        {"partitions", parts},
                        {"bound", cert.bound},
                        {"vacuous", cert.vacuous}};
  return doc.dump(2) + "\n";
}

}  // namespace malg
