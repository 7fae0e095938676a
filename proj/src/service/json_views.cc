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

#include "linkq/service/json_views.h"

#include "linkq/protocol/state_machine.h"
#include "linkq/sparql/query_graph.h"

namespace linkq::service {
namespace {

nlohmann::json ResolutionJson(const protocol::ResolutionOutcome& r) {
  return {{"llmCalls", r.llm_calls},
          {"corrections", r.corrections},
          {"stopped", r.stopped},
          {"stalled", r.stalled},
          {"noIdsResolved", r.no_ids_resolved}};
}

nlohmann::json GeneratedJson(const protocol::GeneratedQuery& g) {
  return {{"query", g.query},
          {"explanation", g.explanation},
          {"ignoredBlocks", g.ignored_blocks},
          {"provenance", "llm"}};
}

template <typename T, typename F>
nlohmann::json OptionalJson(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json ToJson(const ChatMessage& message) {
  return {{"role", RoleName(message.role)},
          {"content", message.content},
          {"timestamp", FormatTimestamp(message.timestamp)},
          {"visibility", VisibilityName(message.visibility)},
          {"provenance", ProvenanceName(message.provenance)}};
}

nlohmann::json ToJson(const protocol::QueryHistoryEntry& entry) {
  return {{"query", entry.query},
          {"origin", protocol::QueryOriginName(entry.origin)},
          {"createdAt", FormatTimestamp(entry.created_at)},
          {"executed", entry.executed}};
}

nlohmann::json ToJson(const results::ResultTable& table) {
  return {{"columns", table.columns},
          {"rows", table.rows},
          {"sourceRowCount", table.source_row_count},
          {"provenance", "kg"}};
}

nlohmann::json ToJson(const QueryPreviewBundle& bundle) {
  nlohmann::json out = {{"query", bundle.query}};
  if (bundle.syntax_error) {
    const auto& e = *bundle.syntax_error;
    out["validation"] = {{"ok", false},
                         {"message", e.message},
                         {"offset", e.position.offset},
                         {"line", e.position.line},
                         {"column", e.position.column}};
  } else {
    out["validation"] = {{"ok", true}};
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : bundle.rows) {
    rows.push_back({{"id", row.id},
                    {"kind", row.kind == IdKind::kEntity ? "entity" : "property"},
                    {"label", row.label},
                    {"description", row.description},
                    {"missing", row.missing},
                    {"provenance", "kg"}});
  }
  out["entityRelationRows"] = std::move(rows);
  out["queryGraph"] = OptionalJson(bundle.graph, [](const sparql::QueryGraph& g) {
    return sparql::ToJson(g);
  });
  out["labelsError"] = bundle.labels_error.empty()
                           ? nlohmann::json(nullptr)
                           : nlohmann::json(bundle.labels_error);
  return out;
}

nlohmann::json ToJson(const ChatDelta& delta) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : delta.messages) messages.push_back(ToJson(m));
  return {{"messages", std::move(messages)},
          {"generatedQuery", OptionalJson(delta.generated, GeneratedJson)},
          {"resolution", OptionalJson(delta.resolution, ResolutionJson)},
          {"state", protocol::StateName(delta.state)}};
}

nlohmann::json ToJson(const RunResult& result) {
  const protocol::RunOutcome& o = result.outcome;
  nlohmann::json summary = nullptr;
  if (o.summary_error.empty()) {
    summary = {{"text", o.summary}, {"provenance", "llm"}};
  }
  return {{"table", ToJson(o.table)},
          {"summary", summary},
          {"summaryError", o.summary_error.empty()
                               ? nlohmann::json(nullptr)
                               : nlohmann::json(o.summary_error)},
          {"endpointError",
           o.endpoint_error_code
               ? nlohmann::json{{"code", ErrorCodeName(*o.endpoint_error_code)},
                                {"message", o.endpoint_error},
                                {"provenance", "kg"}}
               : nlohmann::json(nullptr)},
          {"csvAvailable", true},
          {"csvUrl", result.csv_path}};
}

nlohmann::json ToJson(const SessionSnapshot& s) {
  return {{"id", s.id},
          {"state", protocol::StateName(s.state)},
          {"generatedQuery", OptionalJson(s.generated, GeneratedJson)},
          {"editorQuery", s.editor_query},
          {"lastResolution", OptionalJson(s.last_resolution, ResolutionJson)}};
}

nlohmann::json ErrorJson(const Error& error) {
  return {{"error",
           {{"code", ErrorCodeName(error.code())}, {"message", error.what()}}}};
}

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kInvalidState: return 409;
    case ErrorCode::kTimeout: return 504;
    default: break;
  }
  return IsUpstreamError(code) ? 502 : 400;
}

}  // namespace linkq::service
