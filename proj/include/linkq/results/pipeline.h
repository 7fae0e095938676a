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

#ifndef LINKQ_RESULTS_PIPELINE_H_
#define LINKQ_RESULTS_PIPELINE_H_

#include <string>
#include <string_view>

#include "linkq/kg/types.h"
#include "linkq/llm/llm_client.h"
#include "linkq/prompts/prompt_library.h"
#include "linkq/results/result_table.h"

namespace linkq::results {

// Drops type, datatype and language tags, shortens Wikidata entity IRIs to
// their id and leaves unbound cells empty. Throws Error(kMalformedDocument)
// when a binding names a variable outside doc.vars.
ResultTable CleanResults(const kg::SparqlResultDocument& doc);

// RFC 4180 with CRLF line endings and a header row.
std::string ToCsv(const ResultTable& table);

struct SummaryRequest {
  std::string question;
  std::string query;
  const ResultTable* table = nullptr;
  std::string endpoint_error;
};

// Sends the summary prompt as a single system message and returns the
// reply. Throws Error(kLlmUnavailable) from the client.
std::string Summarize(const prompts::PromptLibrary& library,
                      llm::LlmClient& llm, const SummaryRequest& request,
                      const std::string& model = {});

}  // namespace linkq::results

#endif  // LINKQ_RESULTS_PIPELINE_H_
