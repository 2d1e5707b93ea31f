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

#ifndef MALG_REWRITE_BASE_H_
#define MALG_REWRITE_BASE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "malg/rewrite/rank1.h"
#include "malg/rewrite/rewrite_result.h"

namespace malg {

// Strategy for the one-variable case: E[=r] x . R(x, y) with y the only
// other free variable of R, rewritten into a positive combination of
// preferred formulas.
class BaseCountRewriter {
 public:
  virtual ~BaseCountRewriter() = default;
  virtual std::string name() const = 0;
  virtual RewriteResult RewriteExact(const Formula& r, const VarTuple& x, const std::string& y,
                                     std::uint32_t count) const = 0;
};

// Reads the answer off the solution sets along the family, which must
// settle to a finite or cofinite set.
class StronglyMinimalBase : public BaseCountRewriter {
 public:
  explicit StronglyMinimalBase(Family family, std::size_t suffix = 3)
      : family_(std::move(family)), suffix_(suffix) {}
  std::string name() const override { return "strongly-minimal"; }
  RewriteResult RewriteExact(const Formula& r, const VarTuple& x, const std::string& y,
                             std::uint32_t count) const override;

 private:
  Family family_;
  std::size_t suffix_;
};

// E[>=r] expanded, conjoined with the rank-1 formula for E[<=r], using a
// configuration estimated on the family from the supplied kernels.
class Rank1Base : public BaseCountRewriter {
 public:
  Rank1Base(Family family, std::vector<Rank1Kernel> kernels, std::size_t suffix = 3)
      : family_(std::move(family)), kernels_(std::move(kernels)), suffix_(suffix) {}
  std::string name() const override { return "rank1"; }
  RewriteResult RewriteExact(const Formula& r, const VarTuple& x, const std::string& y,
                             std::uint32_t count) const override;

 private:
  Family family_;
  std::vector<Rank1Kernel> kernels_;
  std::size_t suffix_;
};

// Always throws Error(kBaseFailure).
class FailingBase : public BaseCountRewriter {
 public:
  std::string name() const override { return "fail"; }
  RewriteResult RewriteExact(const Formula& r, const VarTuple& x, const std::string& y,
                             std::uint32_t count) const override;
};

}  // namespace malg

#endif  // MALG_REWRITE_BASE_H_
