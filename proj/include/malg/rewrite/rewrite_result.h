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

#ifndef MALG_REWRITE_REWRITE_RESULT_H_
#define MALG_REWRITE_REWRITE_RESULT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malg/semantics/evaluator.h"
#include "malg/syntax/classify.h"
#include "malg/syntax/formula.h"

namespace malg {

struct TraceStep {
  std::string construction;
  Formula formula;
};

struct RewriteResult {
  Formula output;
  ClassTag tag = ClassTag::kOther;
  // Structures with at least this many elements are where the rewrite is
  // claimed faithful.
  std::size_t min_universe_size = 0;
  std::vector<TraceStep> trace;
  // Kernels certified while rewriting; `tag` is Classify(output, evidence).
  MaEvidence evidence;
};

// Fills in the tag from the output and evidence.
RewriteResult Finish(Formula output, MaEvidence evidence, std::size_t min_universe_size,
                     std::vector<TraceStep> trace);

std::string TraceToJsonText(const std::vector<TraceStep>& trace);

struct StructureVerdict {
  std::string structure;
  Element size = 0;
  bool checked = false;  // false when below min_universe_size
  bool equivalent = true;
  std::optional<Assignment> counterexample;
};

// Compares `input` and `output` on every cutout with at least
// `min_universe_size` elements, over the variables `vars`.
std::vector<StructureVerdict> VerifyOnFamily(const Family& family, const Formula& input,
                                             const Formula& output, const VarTuple& vars,
                                             std::size_t min_universe_size);

bool AllEquivalent(const std::vector<StructureVerdict>& verdicts);

}  // namespace malg

#endif  // MALG_REWRITE_REWRITE_RESULT_H_
