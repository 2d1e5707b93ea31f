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

#ifndef MALG_ALGEBRAICITY_MA_BOUND_H_
#define MALG_ALGEBRAICITY_MA_BOUND_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "malg/semantics/structure.h"
#include "malg/syntax/classify.h"
#include "malg/syntax/formula.h"
#include "malg/syntax/partition.h"

namespace malg {

struct PartitionBound {
  ProperPartition partition;
  // max over y-assignments of the number of x-solutions.
  std::uint64_t max = 0;
};

struct MABoundCertificate {
  Formula formula;
  VarTuple vars;
  std::string structure;
  std::vector<PartitionBound> partitions;
  std::uint64_t bound = 0;
  bool vacuous = false;
};

// Requires free(f) within `z`; throws Error(kFreeVariableMismatch)
// otherwise.
MABoundCertificate MaBound(const FiniteStructure& m, const Formula& f, const VarTuple& z);

enum class Verdict { kStable, kGrowing, kInconclusive };

struct FamilyStabilityReport {
  std::vector<std::pair<std::string, std::uint64_t>> bounds;
  Verdict verdict = Verdict::kInconclusive;
  std::uint64_t stable_bound = 0;  // meaningful when verdict == kStable
  bool vacuous = false;

  // "stable(N)", "growing" or "inconclusive".
  std::string VerdictText() const;
};

constexpr std::size_t kDefaultSuffix = 3;

// Stable when the last `suffix` bounds agree; growing when they are
// non-decreasing and strictly larger at the end; otherwise inconclusive,
// including families shorter than `suffix`.
FamilyStabilityReport FamilyStability(const Family& family, const Formula& f, const VarTuple& z,
                                      std::size_t suffix = kDefaultSuffix);

// Largest count, over the family, of `x`-solutions of `f` for a fixed
// assignment to the other free variables.
std::uint64_t MaxSolutionCount(const Family& family, const Formula& f, const VarTuple& x);

// Adds `kernel` (a quantifier-free formula) to `evidence` unless its bound
// grows along the family. Returns the stability report.
FamilyStabilityReport CertifyKernel(const Family& family, const Formula& kernel,
                                    MaEvidence& evidence, std::size_t suffix = kDefaultSuffix);

// Certifies every relation atom of `f` whose arguments are distinct
// variables.
MaEvidence CertifyAtoms(const Family& family, const Formula& f,
                        std::size_t suffix = kDefaultSuffix);

// Evidence carried by a certificate: its formula, when quantifier-free.
MaEvidence EvidenceOf(const MABoundCertificate& cert);

std::string CertificateToJsonText(const MABoundCertificate& cert);

}  // namespace malg

#endif  // MALG_ALGEBRAICITY_MA_BOUND_H_
