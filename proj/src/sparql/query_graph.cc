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

#include "linkq/sparql/query_graph.h"

#include <map>

#include "linkq/error.h"

namespace linkq::sparql {
namespace {

std::string WithLabel(const std::string& query_text, const std::string& id,
                      const LabelMap& labels) {
  auto it = labels.find(id);
  if (it == labels.end()) {
    throw Error(ErrorCode::kMissingLabel, "no label supplied for " + id);
  }
  if (it->second.missing || it->second.label.empty()) return query_text;
  return query_text + " (" + it->second.label + ")";
}

std::string LiteralDisplay(const Term& term) {
  if (!term.language.empty()) return "\"" + term.value + "\"@" + term.language;
  if (term.datatype.empty() ||
      term.datatype == std::string(kXsdNamespace) + "string") {
    return "\"" + term.value + "\"";
  }
  return term.value;
}

GraphNode MakeNode(const Term& term, const LabelMap& labels) {
  GraphNode node;
  node.key = term.ToQueryText();
  switch (term.kind) {
    case Term::Kind::kEntity:
      node.kind = NodeKind::kKnownEntity;
      node.display_label = WithLabel(node.key, term.value, labels);
      break;
    case Term::Kind::kVariable:
      node.kind = NodeKind::kVariable;
      node.display_label = term.value;
      break;
    case Term::Kind::kLiteral:
      node.kind = NodeKind::kLiteral;
      node.display_label = LiteralDisplay(term);
      break;
    case Term::Kind::kProperty:
      // A property used as a subject/object is drawn as a plain IRI node.
      node.kind = NodeKind::kIri;
      node.display_label = WithLabel(node.key, term.value, labels);
      break;
    case Term::Kind::kOtherIri:
      node.kind = NodeKind::kIri;
      node.display_label = node.key;
      break;
  }
  return node;
}

std::string DotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kKnownEntity: return "knownEntity";
    case NodeKind::kVariable: return "variable";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kIri: return "iri";
  }
  return "iri";
}

const GraphNode* QueryGraph::FindNode(std::string_view key) const {
  for (const GraphNode& node : nodes) {
    if (node.key == key) return &node;
  }
  return nullptr;
}

QueryGraph BuildQueryGraph(const std::vector<TriplePattern>& triples,
                           const LabelMap& labels) {
  QueryGraph graph;
  std::map<std::string, std::size_t> index;
  auto add_node = [&](const Term& term) -> std::string {
    GraphNode node = MakeNode(term, labels);
    std::string key = node.key;
    if (index.emplace(key, graph.nodes.size()).second) {
      graph.nodes.push_back(std::move(node));
    }
    return key;
  };
  for (const TriplePattern& triple : triples) {
    GraphEdge edge;
    edge.source = add_node(triple.subject);
    edge.target = add_node(triple.object);
    const Term& predicate = triple.predicate;
    std::string text = predicate.ToQueryText();
    if (predicate.is_property()) {
      edge.property = predicate.value;
      edge.display_label = WithLabel(text, predicate.value, labels);
    } else if (predicate.is_variable()) {
      edge.property = text;
      edge.display_label = predicate.value;
    } else {
      edge.property = text;
      edge.display_label = text;
    }
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

nlohmann::json ToJson(const QueryGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const GraphNode& node : graph.nodes) {
    nodes.push_back({{"key", node.key},
                     {"label", node.display_label},
                     {"kind", NodeKindName(node.kind)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& edge : graph.edges) {
    edges.push_back({{"source", edge.source},
                     {"target", edge.target},
                     {"property", edge.property},
                     {"label", edge.display_label}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string ToDot(const QueryGraph& graph) {
  std::map<std::string, std::string> ids;
  std::string out = "digraph query {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& node = graph.nodes[i];
    std::string id = "n" + std::to_string(i);
    ids[node.key] = id;
    std::string style;
    switch (node.kind) {
      case NodeKind::kKnownEntity:
        style = "shape=ellipse, style=filled, fillcolor=\"#4e79a7\", fontcolor=white";
        break;
      case NodeKind::kVariable:
        style = "shape=ellipse, style=filled, fillcolor=\"#f28e2b\"";
        break;
      case NodeKind::kLiteral:
        style = "shape=box";
        break;
      case NodeKind::kIri:
        style = "shape=ellipse";
        break;
    }
    out += "  " + id + " [label=\"" + DotEscape(node.display_label) + "\", " +
           style + "];\n";
  }
  for (const GraphEdge& edge : graph.edges) {
    out += "  " + ids[edge.source] + " -> " + ids[edge.target] + " [label=\"" +
           DotEscape(edge.display_label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace linkq::sparql
