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

#ifndef MALG_CLI_FAMILY_ARG_H_
#define MALG_CLI_FAMILY_ARG_H_

#include <string>
#include <string_view>
#include <vector>

#include "malg/corpus/corpus.h"

namespace malg::cli {

// "kind:lo..hi" or "kind:n1,n2,..."; `constants` are NAME=INT strings.
// Throws Error(kInvalidArgument) on malformed text.
FamilySpec ParseFamilyArg(std::string_view text, const std::vector<std::string>& constants = {});

}  // namespace malg::cli

#endif  // MALG_CLI_FAMILY_ARG_H_
