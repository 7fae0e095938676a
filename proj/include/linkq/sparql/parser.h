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

#ifndef LINKQ_SPARQL_PARSER_H_
#define LINKQ_SPARQL_PARSER_H_

#include <optional>
#include <string_view>

#include "linkq/sparql/ast.h"

namespace linkq::sparql {

// Exactly one of `query` and `error` is set.
struct ParseOutcome {
  std::optional<ParsedQuery> query;
  std::optional<SyntaxError> error;

  bool ok() const { return query.has_value(); }
};

// Recursive-descent parser for the SELECT subset used against Wikidata:
// PREFIX/BASE, SELECT [DISTINCT|REDUCED] with projections and aggregates,
// FROM, WHERE groups with ';'/',' abbreviations, property paths, OPTIONAL,
// UNION, MINUS, GRAPH, SERVICE, FILTER [NOT] EXISTS, BIND, VALUES,
// sub-selects, GROUP BY, HAVING, ORDER BY, LIMIT and OFFSET.
//
// Total: every input yields either a query or a positioned error.
ParseOutcome Parse(std::string_view text);

}  // namespace linkq::sparql

#endif  // LINKQ_SPARQL_PARSER_H_
