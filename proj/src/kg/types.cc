// Copyright 2026 The LinkQ Authors.
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

#include "linkq/kg/types.h"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "linkq/error.h"

namespace linkq::kg {
namespace {

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedDocument, "malformed SPARQL results: " + why);
}

std::string OptionalString(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) Malformed(std::string(key) + " is not a string");
  return it->get<std::string>();
}

}  // namespace

SparqlResultDocument ParseSparqlResults(std::string_view json) {
  nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) Malformed("not a JSON object");
  SparqlResultDocument out;
  auto head = doc.find("head");
  if (head == doc.end() || !head->is_object()) Malformed("missing head");
  auto vars = head->find("vars");
  if (vars != head->end()) {
    if (!vars->is_array()) Malformed("head.vars is not an array");
    for (const auto& v : *vars) {
      if (!v.is_string()) Malformed("variable name is not a string");
      out.vars.push_back(v.get<std::string>());
    }
  }
  auto results = doc.find("results");
  if (results == doc.end() || !results->is_object()) Malformed("missing results");
  auto bindings = results->find("bindings");
  if (bindings == results->end() || !bindings->is_array()) {
    Malformed("missing results.bindings");
  }
  for (const auto& row : *bindings) {
    if (!row.is_object()) Malformed("binding row is not an object");
    std::map<std::string, RdfTerm> parsed;
    for (const auto& [name, term] : row.items()) {
      if (std::find(out.vars.begin(), out.vars.end(), name) == out.vars.end()) {
        Malformed("binding for undeclared variable ?" + name);
      }
      if (!term.is_object()) Malformed("term for ?" + name + " is not an object");
      RdfTerm t;
      t.type = OptionalString(term, "type");
      if (!term.contains("value")) Malformed("term for ?" + name + " has no value");
      t.value = OptionalString(term, "value");
      t.datatype = OptionalString(term, "datatype");
      t.lang = OptionalString(term, "xml:lang");
      parsed.emplace(name, std::move(t));
    }
    out.bindings.push_back(std::move(parsed));
  }
  return out;
}

}  // namespace linkq::kg
