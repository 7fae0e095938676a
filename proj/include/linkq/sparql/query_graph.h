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

#ifndef LINKQ_SPARQL_QUERY_GRAPH_H_
#define LINKQ_SPARQL_QUERY_GRAPH_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkq/labels.h"
#include "linkq/sparql/ast.h"

namespace linkq::sparql {

enum class NodeKind {
  kKnownEntity,  // a wd: item
  kVariable,     // an unresolved query variable
  kLiteral,      // a data value
  kIri,          // any other IRI (rdfs:Class, <http://...>, wd:L1, ...)
};

std::string_view NodeKindName(NodeKind kind);

struct GraphNode {
  // Unique within a graph: the term's query text.
  std::string key;
  std::string display_label;
  NodeKind kind = NodeKind::kIri;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::string source;
  std::string target;
  // P-id for Wikidata properties, otherwise the predicate's query text.
  std::string property;
  std::string display_label;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct QueryGraph {
  std::vector<GraphNode> nodes;  // in first-appearance order
  std::vector<GraphEdge> edges;  // one per triple, in triple order

  const GraphNode* FindNode(std::string_view key) const;
};

// One node per distinct subject/object term, one edge per triple. Entity
// nodes and property edges are labelled "<query text> (<KG label>)".
// Throws Error(kMissingLabel) when `labels` lacks a Q/P id used in
// `triples`.
QueryGraph BuildQueryGraph(const std::vector<TriplePattern>& triples,
                           const LabelMap& labels);

nlohmann::json ToJson(const QueryGraph& graph);

// Graphviz rendering; entity nodes are blue, variables orange.
std::string ToDot(const QueryGraph& graph);

}  // namespace linkq::sparql

#endif  // LINKQ_SPARQL_QUERY_GRAPH_H_
