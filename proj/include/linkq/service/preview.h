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

#ifndef LINKQ_SERVICE_PREVIEW_H_
#define LINKQ_SERVICE_PREVIEW_H_

#include <optional>
#include <string>
#include <vector>

#include "linkq/kg/kg_client.h"
#include "linkq/sparql/ast.h"
#include "linkq/sparql/query_graph.h"

namespace linkq::service {

enum class IdKind { kEntity, kProperty };

struct EntityRelationRow {
  std::string id;
  IdKind kind = IdKind::kEntity;
  std::string label;
  std::string description;
  bool missing = false;
};

// Everything the preview panel shows for one query text.
struct QueryPreviewBundle {
  std::string query;
  std::optional<sparql::SyntaxError> syntax_error;
  // Entities first, then properties, each in first-appearance order.
  std::vector<EntityRelationRow> rows;
  std::optional<sparql::QueryGraph> graph;
  // Set when labels could not be fetched; rows and graph carry ids only.
  std::string labels_error;

  bool valid() const { return !syntax_error.has_value(); }
};

// validate -> extract_ids -> fetch_labels -> extract_bgp -> build graph.
// `kg` may be null, which behaves like an unreachable KG.
QueryPreviewBundle BuildPreview(std::string query, kg::KgClient* kg);

}  // namespace linkq::service

#endif  // LINKQ_SERVICE_PREVIEW_H_
