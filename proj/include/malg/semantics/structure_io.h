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

#ifndef MALG_SEMANTICS_STRUCTURE_IO_H_
#define MALG_SEMANTICS_STRUCTURE_IO_H_

#include <filesystem>
#include <string>

#include "malg/semantics/structure.h"

namespace malg {

// Structure files are JSON objects
//   {"universe": n, "relations": {NAME: {"arity": k, "tuples": [[...], ...]}},
//    "constants": {NAME: e}}
// Unknown keys are rejected with Error(kSchema). Output is deterministic.

FiniteStructure StructureFromJsonText(const std::string& text, std::string id = "");
std::string StructureToJsonText(const FiniteStructure& m);

// Throws Error(kIo) when the file cannot be read or written. The loaded
// structure's id is the file stem.
FiniteStructure LoadStructure(const std::filesystem::path& path);
void StoreStructure(const FiniteStructure& m, const std::filesystem::path& path);

}  // namespace malg

#endif  // MALG_SEMANTICS_STRUCTURE_IO_H_
