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

#include "malg/error.h"

namespace malg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnknownSymbol: return "unknown-symbol";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kBoundVariable: return "bound-variable";
    case ErrorCode::kUnboundVariable: return "unbound-variable";
    case ErrorCode::kFreeVariableMismatch: return "free-variable-mismatch";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kStructureTooSmall: return "structure-too-small";
    case ErrorCode::kBaseFailure: return "base-failure";
    case ErrorCode::kBoundTooSmall: return "bound-too-small";
    case ErrorCode::kNotStable: return "not-stable";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace malg
