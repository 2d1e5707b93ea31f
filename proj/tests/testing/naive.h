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

#ifndef MALG_TESTS_TESTING_NAIVE_H_
#define MALG_TESTS_TESTING_NAIVE_H_

#include <cstdint>
#include <map>
#include <string>

#include "malg/semantics/structure.h"
#include "malg/syntax/formula.h"

namespace malg::testing {

// Textbook recursive satisfaction with no compilation, ordering or memo.
// Shares nothing with the library evaluator beyond the AST and structure
// types.
bool NaiveEval(const FiniteStructure& m, const Formula& f,
               std::map<std::string, Element> alpha);

// Number of assignments to `vars` satisfying f, counted by nested loops.
std::uint64_t NaiveCount(const FiniteStructure& m, const Formula& f, const VarTuple& vars,
                         const std::map<std::string, Element>& alpha);

// Max over partitions and y-assignments of the naive x-count; 0 for
// tuples of length at most one.
std::uint64_t NaiveMaBound(const FiniteStructure& m, const Formula& f, const VarTuple& z);

}  // namespace malg::testing

#endif  // MALG_TESTS_TESTING_NAIVE_H_
