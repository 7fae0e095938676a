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

#include "linkq/results/pipeline.h"

#include <algorithm>

#include "linkq/error.h"
#include "linkq/kg/kg_client.h"

namespace linkq::results {
namespace {

bool NeedsQuoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

void AppendField(std::string& out, const std::string& field) {
  if (!NeedsQuoting(field)) {
    out += field;
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

void AppendRecord(std::string& out, const std::vector<std::string>& fields) {
  // A lone empty field would otherwise be indistinguishable from a blank
  // line.
  if (fields.size() == 1 && fields[0].empty()) {
    out += "\"\"\r\n";
    return;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    AppendField(out, fields[i]);
  }
  out += "\r\n";
}

}  // namespace

ResultTable CleanResults(const kg::SparqlResultDocument& doc) {
  ResultTable table;
  table.columns = doc.vars;
  table.source_row_count = doc.bindings.size();
  for (const auto& binding : doc.bindings) {
    for (const auto& [name, term] : binding) {
      if (std::find(doc.vars.begin(), doc.vars.end(), name) == doc.vars.end()) {
        throw Error(ErrorCode::kMalformedDocument,
                    "binding for undeclared variable ?" + name);
      }
    }
    std::vector<std::string> row;
    row.reserve(doc.vars.size());
    for (const std::string& var : doc.vars) {
      auto it = binding.find(var);
      if (it == binding.end()) {
        row.emplace_back();
      } else if (it->second.type == "uri") {
        row.push_back(kg::ShortenEntityIri(it->second.value));
      } else {
        row.push_back(it->second.value);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ToCsv(const ResultTable& table) {
  std::string out;
  AppendRecord(out, table.columns);
  for (const auto& row : table.rows) AppendRecord(out, row);
  return out;
}

std::string Summarize(const prompts::PromptLibrary& library,
                      llm::LlmClient& llm, const SummaryRequest& request,
                      const std::string& model) {
  static const ResultTable kEmpty;
  const ResultTable& table = request.table ? *request.table : kEmpty;
  llm::CompletionRequest completion;
  completion.model = model;
  completion.messages.push_back(ChatMessage{
      Role::kSystem,
      library.RenderSummaryPrompt(request.question, request.query, table,
                                  request.endpoint_error),
      {},
      Visibility::kInternalProtocol,
      Provenance::kSystem});
  return llm.Complete(completion);
}

}  // namespace linkq::results
