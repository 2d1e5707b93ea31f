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

#include "malg/cli/report.h"

#include "malg/syntax/printer.h"

namespace malg::cli {

using nlohmann::json;

Report::Report(std::vector<std::string> command) : start_(std::chrono::steady_clock::now()) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = json::object();
  doc_["outputs"] = json::object();
  doc_["verdicts"] = json::array();
}

json AssignmentJson(const Assignment& a) {
  json out = json::object();
  for (const auto& [k, v] : a) out[k] = v;
  return out;
}

void Report::SetResult(const RewriteResult& result) {
  json& o = outputs();
  o["formula"] = Print(result.output);
  o["class"] = std::string(ClassTagName(result.tag));
  json tags = json::array();
  for (ClassTag t : ClassifyAll(result.output, result.evidence).list()) {
    tags.push_back(std::string(ClassTagName(t)));
  }
  o["tags"] = tags;
  o["min_universe_size"] = result.min_universe_size;
  json trace = json::array();
  for (const auto& s : result.trace) trace.push_back({s.construction, Print(s.formula)});
  o["trace"] = trace;
}

void Report::AddVerdicts(const std::vector<StructureVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    json j = {{"structure", v.structure}, {"size", v.size}, {"checked", v.checked}};
    if (v.checked) j["equivalent"] = v.equivalent;
    if (v.counterexample) j["counterexample"] = AssignmentJson(*v.counterexample);
    doc_["verdicts"].push_back(j);
  }
}

void Report::SetError(const std::string& code, const std::string& message) {
  doc_["error"] = {{"code", code}, {"message", message}};
}

namespace {

void Human(std::ostream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        Human(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        Human(out, v, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

void Report::Write(std::ostream& out, bool human) {
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
  doc_["timings"] = {{"total_ms", ms.count()}};
  if (human) {
    Human(out, doc_, 0);
  } else {
    out << doc_.dump(2) << "\n";
  }
}

}  // namespace malg::cli
