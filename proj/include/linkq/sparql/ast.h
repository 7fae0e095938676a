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

#ifndef LINKQ_SPARQL_AST_H_
#define LINKQ_SPARQL_AST_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linkq::sparql {

// Namespaces behind the Wikidata prefix idiom.
inline constexpr char kEntityNamespace[] = "http://www.wikidata.org/entity/";
inline constexpr char kDirectClaimNamespace[] =
    "http://www.wikidata.org/prop/direct/";
inline constexpr char kClaimNamespace[] = "http://www.wikidata.org/prop/";
inline constexpr char kStatementNamespace[] =
    "http://www.wikidata.org/prop/statement/";
inline constexpr char kQualifierNamespace[] =
    "http://www.wikidata.org/prop/qualifier/";
inline constexpr char kXsdNamespace[] = "http://www.w3.org/2001/XMLSchema#";

// prefix label -> namespace IRI
using PrefixMap = std::map<std::string, std::string>;

// The prefixes the Wikidata query service predeclares.
const PrefixMap& DefaultPrefixes();

struct SourcePosition {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePosition&,
                         const SourcePosition&) = default;
};

struct SyntaxError {
  SourcePosition position;
  std::string message;
};

// One subject/predicate/object component of a triple pattern.
struct Term {
  enum class Kind { kEntity, kProperty, kVariable, kLiteral, kOtherIri };

  Kind kind = Kind::kOtherIri;
  // Entity/property: bare id ("Q312"). Variable: bare name. Literal:
  // lexical form. OtherIri: the text as written ("rdfs:label", "a",
  // "<http://...>", or a property path such as "wdt:P31/wdt:P279*").
  std::string value;
  // Entity/property only: the prefix label as written ("wd", "wdt", ...).
  std::string prefix;
  // Literal only: expanded datatype IRI, or empty.
  std::string datatype;
  // Literal only: language tag, or empty.
  std::string language;

  static Term Entity(std::string id, std::string prefix = "wd");
  static Term Property(std::string id, std::string prefix);
  static Term Variable(std::string name);
  static Term Literal(std::string lexical, std::string datatype = {},
                      std::string language = {});
  static Term OtherIri(std::string text);

  bool is_entity() const { return kind == Kind::kEntity; }
  bool is_property() const { return kind == Kind::kProperty; }
  bool is_variable() const { return kind == Kind::kVariable; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  // Query-text form that parses back to an equal Term.
  std::string ToQueryText() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// Innermost construct enclosing a triple, for deciding what the preview
// graph draws.
enum class PatternScope {
  kMain,         // the WHERE group, nested plain groups, OPTIONAL, UNION
  kSubSelect,
  kService,
  kFilter,       // EXISTS / NOT EXISTS inside a FILTER or expression
  kMinus,
  kNamedGraph,
};

struct ScopedTriple {
  TriplePattern triple;
  PatternScope scope = PatternScope::kMain;
};

// An occurrence of a Wikidata-prefixed identifier anywhere in the query.
struct IdOccurrence {
  Term term;  // kind is kEntity or kProperty
  SourcePosition position;
};

struct ParsedQuery {
  PrefixMap declared_prefixes;
  bool distinct = false;
  bool select_all = false;
  std::vector<std::string> projection;  // bare variable names, in order
  std::vector<ScopedTriple> triples;    // in source order
  std::vector<IdOccurrence> ids;        // in source order
  std::optional<long long> limit;
  std::optional<long long> offset;
};

}  // namespace linkq::sparql

#endif  // LINKQ_SPARQL_AST_H_
