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

#include "malg/cli/family_arg.h"

#include <charconv>

#include "malg/error.h"

namespace malg::cli {

namespace {

Element ToSize(std::string_view s, std::string_view whole) {
  Element v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bad number '" + std::string(s) + "' in '" +
                                                 std::string(whole) + "'");
  }
  return v;
}

}  // namespace

FamilySpec ParseFamilyArg(std::string_view text, const std::vector<std::string>& constants) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "family must look like kind:lo..hi, got '" + std::string(text) + "'");
  }
  auto kind = ParseFamilyKind(text.substr(0, colon));
  if (!kind) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown family kind '" + std::string(text.substr(0, colon)) + "'");
  }
  std::map<std::string, Element> consts;
  for (const auto& c : constants) {
    auto eq = c.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidArgument, "constant must look like NAME=INT, got '" + c + "'");
    }
    consts[c.substr(0, eq)] = ToSize(std::string_view(c).substr(eq + 1), c);
  }
  std::string_view sizes = text.substr(colon + 1);
  FamilySpec spec;
  if (auto dots = sizes.find(".."); dots != std::string_view::npos) {
    spec = RangeSpec(*kind, ToSize(sizes.substr(0, dots), text), ToSize(sizes.substr(dots + 2), text),
                     consts);
  } else {
    spec = FamilySpec{*kind, {}, consts};
    while (!sizes.empty()) {
      auto comma = sizes.find(',');
      spec.sizes.push_back(ToSize(sizes.substr(0, comma), text));
      sizes = comma == std::string_view::npos ? std::string_view() : sizes.substr(comma + 1);
    }
  }
  ValidateFamilySpec(spec);
  return spec;
}

}  // namespace malg::cli
