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

#ifndef LINKQ_KG_TYPES_H_
#define LINKQ_KG_TYPES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/ids.h"

namespace linkq::kg {

struct EntityMatch {
  EntityId id;
  std::string label;
  std::string description;
  // 0-based position in the service's ranking.
  int match_rank = 0;

  friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

struct PropertyRecord {
  PropertyId id;
  std::string label;
  std::string description;
  // One example object, for context.
  std::optional<std::string> sample_value;

  friend bool operator==(const PropertyRecord&, const PropertyRecord&) = default;
};

struct PropertyList {
  std::vector<PropertyRecord> properties;
  // More properties exist than the configured cap.
  bool truncated = false;
};

// One RDF term in a SPARQL JSON results binding.
struct RdfTerm {
  std::string type;  // "uri", "literal", "bnode" (or "typed-literal")
  std::string value;
  std::string datatype;
  std::string lang;

  friend bool operator==(const RdfTerm&, const RdfTerm&) = default;
};

struct SparqlResultDocument {
  std::vector<std::string> vars;
  std::vector<std::map<std::string, RdfTerm>> bindings;

  friend bool operator==(const SparqlResultDocument&,
                         const SparqlResultDocument&) = default;
};

// Parses application/sparql-results+json. Throws Error(kMalformedDocument)
// on bad JSON, missing head/results, or a binding key outside head.vars.
SparqlResultDocument ParseSparqlResults(std::string_view json);

}  // namespace linkq::kg

#endif  // LINKQ_KG_TYPES_H_
