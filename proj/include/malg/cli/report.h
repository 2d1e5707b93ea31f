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

#ifndef MALG_CLI_REPORT_H_
#define MALG_CLI_REPORT_H_

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "malg/rewrite/rewrite_result.h"

namespace malg::cli {

// The run report: command echo, inputs, outputs, per-structure verdicts and
// timings. Written as JSON, or as indented text with --human.
class Report {
 public:
  explicit Report(std::vector<std::string> command);

  nlohmann::json& inputs() { return doc_["inputs"]; }
  nlohmann::json& outputs() { return doc_["outputs"]; }
  void SetResult(const RewriteResult& result);
  void AddVerdicts(const std::vector<StructureVerdict>& verdicts);
  void SetError(const std::string& code, const std::string& message);

  void Write(std::ostream& out, bool human);

 private:
  nlohmann::json doc_;
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json AssignmentJson(const Assignment& a);

}  // namespace malg::cli

#endif  // MALG_CLI_REPORT_H_
