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

#include "malg/semantics/structure_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "malg/error.h"

namespace malg {

namespace {

using nlohmann::json;

void OnlyKeys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::kSchema, where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::kSchema, "unknown key '" + key + "' in " + where);
  }
}

Element ToElement(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      v.get<std::int64_t>() > std::int64_t{UINT32_MAX}) {
    throw Error(ErrorCode::kSchema, where + " must be a nonnegative integer");
  }
  return static_cast<Element>(v.get<std::int64_t>());
}

}  // namespace

FiniteStructure StructureFromJsonText(const std::string& text, std::string id) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchema, std::string("malformed structure file: ") + e.what());
  }
  OnlyKeys(doc, {"universe", "relations", "constants"}, "structure");
  if (!doc.contains("universe")) throw Error(ErrorCode::kSchema, "missing 'universe'");
  Element n = ToElement(doc["universe"], "'universe'");
  std::map<std::string, Relation> rels;
  if (doc.contains("relations")) {
    const json& rs = doc["relations"];
    if (!rs.is_object()) throw Error(ErrorCode::kSchema, "'relations' must be an object");
    for (const auto& [name, spec] : rs.items()) {
      std::string where = "relation '" + name + "'";
      OnlyKeys(spec, {"arity", "tuples"}, where);
      if (!spec.contains("arity") || !spec.contains("tuples")) {
        throw Error(ErrorCode::kSchema, where + " needs 'arity' and 'tuples'");
      }
      Element arity = ToElement(spec["arity"], where + " arity");
      if (!spec["tuples"].is_array()) throw Error(ErrorCode::kSchema, where + " tuples must be a list");
      std::vector<std::vector<Element>> tuples;
      for (const json& t : spec["tuples"]) {
        if (!t.is_array()) throw Error(ErrorCode::kSchema, where + " tuple must be a list");
        std::vector<Element> row;
        for (const json& e : t) row.push_back(ToElement(e, where + " entry"));
        tuples.push_back(std::move(row));
      }
      rels.emplace(name, Relation(arity, std::move(tuples), n));
    }
  }
  std::map<std::string, Element> consts;
  if (doc.contains("constants")) {
    const json& cs = doc["constants"];
    if (!cs.is_object()) throw Error(ErrorCode::kSchema, "'constants' must be an object");
    for (const auto& [name, v] : cs.items()) consts[name] = ToElement(v, "constant '" + name + "'");
  }
  return FiniteStructure(n, std::move(rels), std::move(consts), std::move(id));
}

std::string StructureToJsonText(const FiniteStructure& m) {
  json doc;
  doc["universe"] = m.size();
  json rels = json::object();
  for (const auto& [name, rel] : m.relations()) {
    rels[name] = {{"arity", rel.arity()}, {"tuples", rel.tuples()}};
  }
  doc["relations"] = rels;
  json consts = json::object();
  for (const auto& [name, e] : m.constants()) consts[name] = e;
  doc["constants"] = consts;
  return doc.dump(2) + "\n";
}

FiniteStructure LoadStructure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return StructureFromJsonText(buf.str(), path.stem().string());
}

void StoreStructure(const FiniteStructure& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << StructureToJsonText(m);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

}  // namespace malg
