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

#include "linkq/sparql/analysis.h"

#include <set>

#include "linkq/error.h"
#include "linkq/sparql/parser.h"

namespace linkq::sparql {
namespace {

ParsedQuery ParseOrThrow(std::string_view query) {
  ParseOutcome outcome = Parse(query);
  if (!outcome.ok()) {
    throw Error(ErrorCode::kInvalidQuery,
                "invalid query: " + FormatSyntaxError(*outcome.error));
  }
  return std::move(*outcome.query);
}

bool DrawnInPreview(PatternScope scope) {
  switch (scope) {
    case PatternScope::kMain:
    case PatternScope::kSubSelect:
    case PatternScope::kNamedGraph:
      return true;
    case PatternScope::kService:
    case PatternScope::kFilter:
    case PatternScope::kMinus:
      return false;
  }
  return false;
}

}  // namespace

ValidationResult Validate(std::string_view query) {
  ParseOutcome outcome = Parse(query);
  return ValidationResult{outcome.error};
}

IdInventory ExtractIds(const ParsedQuery& query) {
  IdInventory inventory;
  std::set<std::string> seen;
  for (const IdOccurrence& occurrence : query.ids) {
    const Term& term = occurrence.term;
    if (!seen.insert(term.value).second) continue;
    if (term.is_entity()) {
      inventory.entity_ids.emplace_back(term.value);
    } else {
      inventory.property_ids.emplace_back(term.value);
    }
  }
  return inventory;
}

IdInventory ExtractIds(std::string_view query) {
  return ExtractIds(ParseOrThrow(query));
}

std::vector<TriplePattern> ExtractBgp(const ParsedQuery& query) {
  std::vector<TriplePattern> out;
  for (const ScopedTriple& scoped : query.triples) {
    if (DrawnInPreview(scoped.scope)) out.push_back(scoped.triple);
  }
  return out;
}

std::vector<TriplePattern> ExtractBgp(std::string_view query) {
  return ExtractBgp(ParseOrThrow(query));
}

std::string RenderBgpQuery(const std::vector<TriplePattern>& triples,
                           const PrefixMap& declared_prefixes) {
  std::string out;
  for (const auto& [label, iri] : declared_prefixes) {
    out += "PREFIX " + label + ": <" + iri + ">\n";
  }
  out += "SELECT * WHERE {\n";
  for (const TriplePattern& t : triples) {
    out += "  " + t.subject.ToQueryText() + " " + t.predicate.ToQueryText() +
           " " + t.object.ToQueryText() + " .\n";
  }
  out += "}\n";
  return out;
}

std::variant<ValidatedQuery, SyntaxError> ValidatedQuery::Check(
    std::string text) {
  ParseOutcome outcome = Parse(text);
  if (!outcome.ok()) return *outcome.error;
  return ValidatedQuery(std::move(text), std::move(*outcome.query));
}

std::string FormatSyntaxError(const SyntaxError& error) {
  return "line " + std::to_string(error.position.line) + ", column " +
         std::to_string(error.position.column) + ": " + error.message;
}

}  // namespace linkq::sparql
