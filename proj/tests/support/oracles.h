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

#ifndef LINKQ_TESTS_SUPPORT_ORACLES_H_
#define LINKQ_TESTS_SUPPORT_ORACLES_H_

#include <random>
#include <string>
#include <vector>

#include "linkq/llm/llm_client.h"
#include "linkq/protocol/session_state.h"
#include "linkq/results/result_table.h"
#include "support/fake_kg.h"

namespace linkq::testing {

// Independent RFC 4180 reader. Sets `error` on unterminated quotes or a
// missing final CRLF.
std::vector<std::vector<std::string>> ReadCsv(const std::string& text,
                                              std::string* error = nullptr);

// Table of awkward cells: separators, quotes, CR/LF, UTF-8 and spaces.
results::ResultTable RandomCsvTable(std::mt19937& rng);

// Every identifier in the resolved context was returned by `kg`, and every
// KG response reached the transcript unchanged. Returns the first violation
// or "".
std::string GroundingViolation(const protocol::SessionState& session,
                               const FakeKg& kg);

// "BUILD QUERY" followed by a random mix of searches, invented and unknown
// identifiers, prose, malformed directives and STOP.
std::vector<std::string> RandomResolutionScript(std::mt19937& rng);

inline constexpr const char* kHarnessQuery =
    "SELECT ?item WHERE { ?item wdt:P31 wd:Q5 . } LIMIT 3";

// LLM stand-in for protocol runs. Replies from `script` while chatting and
// resolving, from `query_replies` once the query-generation prompt has been
// sent, and with `fallback` for summaries or when the script runs out.
class ProtocolLlm final : public llm::LlmClient {
 public:
  std::string Complete(const llm::CompletionRequest& request) override;

  static std::string FencedQuery();

  std::vector<std::string> script;
  std::vector<std::string> query_replies;
  std::string fallback = "STOP";
  bool unavailable_when_empty = false;
  int calls = 0;
  int generation_calls = 0;
};

}  // namespace linkq::testing

#endif  // LINKQ_TESTS_SUPPORT_ORACLES_H_
