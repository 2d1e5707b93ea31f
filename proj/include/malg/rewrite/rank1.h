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

#ifndef MALG_REWRITE_RANK1_H_
#define MALG_REWRITE_RANK1_H_

#include <cstdint>
#include <string>
#include <vector>

#include "malg/rewrite/rewrite_result.h"

namespace malg {

// theta(x, y, z): `vars` lists x, y, z in that order; theta is
// quantifier-free with free variables among them and mentions x and y.
struct Rank1Kernel {
  Formula formula;
  VarTuple vars;
};

struct Rank1Config {
  std::vector<Rank1Kernel> kernels;
  std::vector<Term> q;            // exceptional elements: literals or constants
  std::uint32_t ell_star = 0;
  std::vector<std::uint64_t> n_theta;  // per kernel: solutions of the tail are < N
  std::size_t threshold = 0;      // smallest cutout size the estimate covers
};

// Error(kInvalidConfig) unless the kernels are well formed, n_theta matches
// them, Q holds no variables and ell_star <= sum N_theta * (lg(vars) - 1).
void ValidateRank1Config(const Rank1Config& cfg);

// w in F_r(y): w is part of a tuple realizing some theta(y, ...) in a slot
// other than the first, and E[>=r+1] z . R(z, w). `r_formula` has free
// variables z and `x`; the result has free variables w and y. Empty kernel
// list gives False.
Formula FrMembership(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                     const std::string& x, std::uint32_t r, const std::string& w,
                     const std::string& y);

// delta(x) = OR_theta exists y z'.(theta(x, y, z') & AND_{q in Q} !(y = q) &
//   exists distinct w_0..w_{l*-1} (AND_i w_i in F_r(y) & AND_i !(x = w_i))),
// with counting expanded. Intended to agree with E[<=r] z . R(z, x) on
// cutouts of size at least cfg.threshold.
RewriteResult Rank1Delta(const Rank1Config& cfg, const Formula& r_formula, const VarTuple& z,
                         const std::string& x, std::uint32_t r);

// Heuristic estimate. On each cutout it measures |F_r(b)| for every b. A
// value is generic when the number of b attaining it strictly increases
// along the last `suffix` cutouts; l* is the largest generic value and Q
// the elements above l* on the largest cutout, whose count must not change
// along the suffix. Throws Error(kNotStable) when this fails or the family
// is shorter than `suffix`.
Rank1Config EstimateRank1Config(const Family& family, const std::vector<Rank1Kernel>& kernels,
                                const Formula& r_formula, const VarTuple& z, const std::string& x,
                                std::uint32_t r, std::size_t suffix = 3);

}  // namespace malg

#endif  // MALG_REWRITE_RANK1_H_
