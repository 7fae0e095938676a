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

#ifndef LINKQ_PROMPTS_PROMPT_LIBRARY_H_
#define LINKQ_PROMPTS_PROMPT_LIBRARY_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/results/result_table.h"

namespace linkq::prompts {

enum class TemplateId {
  kInitialSystem,
  kIdIdentification,
  kQueryGeneration,
  kResultsSummary,
  // Instruction fragments substituted into kResultsSummary's {task}.
  kSummaryTaskSummarize,
  kSummaryTaskDiagnose,
};
inline constexpr std::size_t kTemplateCount = 6;

std::string_view TemplateName(TemplateId id);
// File name inside the prompt directory, e.g. "initial_system.txt".
std::string_view TemplateFileName(TemplateId id);

using Bindings = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultSummaryRowCap = 50;

// Prompt templates loaded from text files. Placeholders are written
// `{name}` where name is an identifier; other braces (SPARQL groups) are
// literal text. Immutable after loading.
class PromptLibrary {
 public:
  // Throws Error(kNotFound) when a template file is missing.
  static PromptLibrary Load(const std::string& directory);
  // $LINKQ_PROMPT_DIR when set, else the directory compiled into the build.
  static PromptLibrary LoadDefault();
  static std::string DefaultDirectory();

  const std::string& Body(TemplateId id) const;
  // Distinct placeholder names in order of first appearance.
  std::vector<std::string> Placeholders(TemplateId id) const;

  // Substitutes every placeholder in one pass; substituted values are not
  // rescanned. Extra bindings are ignored. Throws Error(kMissingBinding).
  std::string Render(TemplateId id, const Bindings& bindings) const;

  // Results prompt for the LLM. Non-empty tables get the summarize task and
  // at most summary_row_cap rows; empty tables or a non-empty
  // `endpoint_error` get the diagnosis task.
  std::string RenderSummaryPrompt(std::string_view question,
                                  std::string_view query,
                                  const results::ResultTable& table,
                                  std::string_view endpoint_error = {}) const;

  std::size_t summary_row_cap() const { return summary_row_cap_; }
  void set_summary_row_cap(std::size_t cap) { summary_row_cap_ = cap; }

 private:
  std::array<std::string, kTemplateCount> bodies_;
  std::size_t summary_row_cap_ = kDefaultSummaryRowCap;
};

// Placeholder names found in `body`, first-appearance order.
std::vector<std::string> FindPlaceholders(std::string_view body);

// Compact one-row-per-line rendering used inside the summary prompt.
std::string SerializeRowsForPrompt(const results::ResultTable& table,
                                   std::size_t row_cap);

}  // namespace linkq::prompts

#endif  // LINKQ_PROMPTS_PROMPT_LIBRARY_H_
