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

#include "linkq/service/preview.h"

#include "linkq/error.h"
#include "linkq/sparql/analysis.h"

namespace linkq::service {

QueryPreviewBundle BuildPreview(std::string query, kg::KgClient* kg) {
  QueryPreviewBundle bundle;
  bundle.query = std::move(query);
  auto checked = sparql::ValidatedQuery::Check(bundle.query);
  if (auto* error = std::get_if<sparql::SyntaxError>(&checked)) {
    bundle.syntax_error = *error;
    return bundle;
  }
  const sparql::ParsedQuery& parsed =
      std::get<sparql::ValidatedQuery>(checked).parsed();
  sparql::IdInventory ids = sparql::ExtractIds(parsed);

  std::vector<std::string> all;
  for (const auto& id : ids.entity_ids) all.push_back(id.str());
  for (const auto& id : ids.property_ids) all.push_back(id.str());

  LabelMap labels;
  if (!all.empty()) {
    try {
      if (!kg) throw Error(ErrorCode::kKgUnavailable, "no knowledge graph client");
      labels = kg->FetchLabels(all);
    } catch (const Error& e) {
      if (!IsUpstreamError(e.code())) throw;
      bundle.labels_error = e.what();
      labels.clear();
      for (const std::string& id : all) labels[id] = EntityLabel{"", "", true};
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const EntityLabel& label = labels.at(all[i]);
    bundle.rows.push_back(EntityRelationRow{
        all[i], i < ids.entity_ids.size() ? IdKind::kEntity : IdKind::kProperty,
        label.label, label.description, label.missing});
  }
  bundle.graph = sparql::BuildQueryGraph(sparql::ExtractBgp(parsed), labels);
  return bundle;
}

}  // namespace linkq::service
