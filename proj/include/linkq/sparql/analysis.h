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

#ifndef LINKQ_SPARQL_ANALYSIS_H_
#define LINKQ_SPARQL_ANALYSIS_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkq/ids.h"
#include "linkq/sparql/ast.h"

namespace linkq::sparql {

struct ValidationResult {
  std::optional<SyntaxError> error;

  bool ok() const { return !error.has_value(); }
};

// Never throws; malformed input yields a positioned error.
ValidationResult Validate(std::string_view query);

// Q/P identifiers written with a Wikidata prefix (wd: for entities;
// wdt:, p:, ps:, pq: for properties), deduplicated, in order of first
// appearance. FILTER and SERVICE blocks are included.
struct IdInventory {
  std::vector<EntityId> entity_ids;
  std::vector<PropertyId> property_ids;

  bool empty() const { return entity_ids.empty() && property_ids.empty(); }
  friend bool operator==(const IdInventory&, const IdInventory&) = default;
};

// Precondition: Validate(query).ok(). Throws Error(kInvalidQuery) otherwise.
IdInventory ExtractIds(std::string_view query);
IdInventory ExtractIds(const ParsedQuery& query);

// The triple patterns of the WHERE clause with ';' and ',' expanded.
// SERVICE blocks, FILTER [NOT] EXISTS groups and MINUS groups contribute
// nothing; OPTIONAL, UNION branches, nested groups, GRAPH blocks and
// sub-selects do.
// Precondition: Validate(query).ok(). Throws Error(kInvalidQuery) otherwise.
std::vector<TriplePattern> ExtractBgp(std::string_view query);
std::vector<TriplePattern> ExtractBgp(const ParsedQuery& query);

// "SELECT * WHERE { s p o . ... }" with the given PREFIX declarations.
// Parsing the result and calling ExtractBgp reproduces `triples`.
std::string RenderBgpQuery(const std::vector<TriplePattern>& triples,
                           const PrefixMap& declared_prefixes = {});

// Query text that is known to have passed Validate. The only way to
// obtain one is Check, so holding a ValidatedQuery proves validation.
class ValidatedQuery {
 public:
  static std::variant<ValidatedQuery, SyntaxError> Check(std::string text);

  const std::string& text() const { return text_; }
  const ParsedQuery& parsed() const { return parsed_; }

 private:
  ValidatedQuery(std::string text, ParsedQuery parsed)
      : text_(std::move(text)), parsed_(std::move(parsed)) {}

  std::string text_;
  ParsedQuery parsed_;
};

// "line 3, column 7: expected '}' ..." for diagnostics.
std::string FormatSyntaxError(const SyntaxError& error);

}  // namespace linkq::sparql

#endif  // LINKQ_SPARQL_ANALYSIS_H_
