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

#include "linkq/prompts/prompt_library.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "linkq/error.h"
#include "linkq/text.h"

namespace linkq::prompts {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Length of the placeholder starting at text[i] ('{'), or 0.
std::size_t PlaceholderLength(std::string_view text, std::size_t i) {
  if (text[i] != '{' || i + 1 >= text.size() || !IsIdentStart(text[i + 1])) {
    return 0;
  }
  std::size_t j = i + 2;
  while (j < text.size() && IsIdentChar(text[j])) ++j;
  if (j >= text.size() || text[j] != '}') return 0;
  return j + 1 - i;
}

std::string OneLine(std::string_view cell) {
  std::string out(cell);
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), '\r', ' ');
  return out;
}

std::string JoinRow(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += " | ";
    out += OneLine(cells[i]);
  }
  return out;
}

}  // namespace

std::string_view TemplateName(TemplateId id) {
  switch (id) {
    case TemplateId::kInitialSystem: return "initialSystem";
    case TemplateId::kIdIdentification: return "idIdentification";
    case TemplateId::kQueryGeneration: return "queryGeneration";
    case TemplateId::kResultsSummary: return "resultsSummary";
    case TemplateId::kSummaryTaskSummarize: return "summaryTaskSummarize";
    case TemplateId::kSummaryTaskDiagnose: return "summaryTaskDiagnose";
  }
  return "unknown";
}

std::string_view TemplateFileName(TemplateId id) {
  switch (id) {
    case TemplateId::kInitialSystem: return "initial_system.txt";
    case TemplateId::kIdIdentification: return "id_identification.txt";
    case TemplateId::kQueryGeneration: return "query_generation.txt";
    case TemplateId::kResultsSummary: return "results_summary.txt";
    case TemplateId::kSummaryTaskSummarize: return "summary_task_summarize.txt";
    case TemplateId::kSummaryTaskDiagnose: return "summary_task_diagnose.txt";
  }
  return "";
}

std::vector<std::string> FindPlaceholders(std::string_view body) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < body.size(); ++i) {
    std::size_t len = PlaceholderLength(body, i);
    if (len == 0) continue;
    std::string name(body.substr(i + 1, len - 2));
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(std::move(name));
    }
    i += len - 1;
  }
  return names;
}

PromptLibrary PromptLibrary::Load(const std::string& directory) {
  PromptLibrary library;
  for (std::size_t i = 0; i < kTemplateCount; ++i) {
    auto id = static_cast<TemplateId>(i);
    library.bodies_[i] =
        ReadFileOrThrow(directory + "/" + std::string(TemplateFileName(id)));
  }
  return library;
}

std::string PromptLibrary::DefaultDirectory() {
  if (const char* env = std::getenv("LINKQ_PROMPT_DIR"); env && *env) {
    return env;
  }
  return LINKQ_DEFAULT_PROMPT_DIR;
}

PromptLibrary PromptLibrary::LoadDefault() { return Load(DefaultDirectory()); }

const std::string& PromptLibrary::Body(TemplateId id) const {
  return bodies_[static_cast<std::size_t>(id)];
}

std::vector<std::string> PromptLibrary::Placeholders(TemplateId id) const {
  return FindPlaceholders(Body(id));
}

std::string PromptLibrary::Render(TemplateId id,
                                  const Bindings& bindings) const {
  const std::string& body = Body(id);
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    std::size_t len = PlaceholderLength(body, i);
    if (len == 0) {
      out.push_back(body[i]);
      continue;
    }
    std::string name = body.substr(i + 1, len - 2);
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw Error(ErrorCode::kMissingBinding,
                  "template " + std::string(TemplateName(id)) +
                      " needs a value for {" + name + "}");
    }
    out += it->second;
    i += len - 1;
  }
  return out;
}

std::string SerializeRowsForPrompt(const results::ResultTable& table,
                                   std::size_t row_cap) {
  std::string out = JoinRow(table.columns) + "\n";
  if (table.rows.empty()) return out + "(no rows)";
  std::size_t shown = std::min(row_cap, table.rows.size());
  for (std::size_t i = 0; i < shown; ++i) out += JoinRow(table.rows[i]) + "\n";
  if (shown < table.rows.size()) {
    out += "(truncated: showing the first " + std::to_string(shown) + " of " +
           std::to_string(table.rows.size()) + " rows)\n";
  }
  out.pop_back();
  return out;
}

std::string PromptLibrary::RenderSummaryPrompt(
    std::string_view question, std::string_view query,
    const results::ResultTable& table, std::string_view endpoint_error) const {
  bool failed = table.rows.empty() || !endpoint_error.empty();
  std::string results_text =
      endpoint_error.empty()
          ? SerializeRowsForPrompt(table, summary_row_cap_)
          : "The endpoint rejected the query with this message:\n" +
                std::string(endpoint_error);
  Bindings bindings = {
      {"question", std::string(question)},
      {"query", std::string(query)},
      {"results", results_text},
      {"task", Body(failed ? TemplateId::kSummaryTaskDiagnose
                           : TemplateId::kSummaryTaskSummarize)},
  };
  return Render(TemplateId::kResultsSummary, bindings);
}

}  // namespace linkq::prompts
