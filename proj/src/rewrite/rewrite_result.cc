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

#include "malg/rewrite/rewrite_result.h"

#include "json.hpp"
#include "malg/semantics/oracle.h"
#include "malg/syntax/printer.h"

namespace malg {

RewriteResult Finish(Formula output, MaEvidence evidence, std::size_t min_universe_size,
                     std::vector<TraceStep> trace) {
  RewriteResult r{.output = std::move(output)};
  r.tag = Classify(r.output, evidence);
  r.min_universe_size = min_universe_size;
  r.trace = std::move(trace);
  r.evidence = std::move(evidence);
  return r;
}

std::string TraceToJsonText(const std::vector<TraceStep>& trace) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& s : trace) doc.push_back({s.construction, Print(s.formula)});
  return doc.dump(2) + "\n";
}

std::vector<StructureVerdict> VerifyOnFamily(const Family& family, const Formula& input,
                                             const Formula& output, const VarTuple& vars,
                                             std::size_t min_universe_size) {
  std::vector<StructureVerdict> out;
  for (const auto& m : family) {
    StructureVerdict v{.structure = m.id(), .size = m.size()};
    if (m.size() >= min_universe_size) {
      v.checked = true;
      EquivalenceResult eq = EquivalentOn(m, input, output, vars);
      v.equivalent = eq.equivalent;
      v.counterexample = eq.counterexample;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool AllEquivalent(const std::vector<StructureVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.checked && !v.equivalent) return false;
  }
  return true;
}

}  // namespace malg
