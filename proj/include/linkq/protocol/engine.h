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

#ifndef LINKQ_PROTOCOL_ENGINE_H_
#define LINKQ_PROTOCOL_ENGINE_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/clock.h"
#include "linkq/error.h"
#include "linkq/kg/kg_client.h"
#include "linkq/llm/llm_client.h"
#include "linkq/prompts/prompt_library.h"
#include "linkq/protocol/session_state.h"

namespace linkq::protocol {

inline constexpr int kDefaultMaxResolutionIterations = 15;
inline constexpr int kDefaultMaxCorrections = 2;

struct EngineConfig {
  int max_resolution_iterations = kDefaultMaxResolutionIterations;
  int max_corrections = kDefaultMaxCorrections;
  int search_limit = 5;
  std::string model;  // empty: the client's default
  double temperature = 0.0;
  int max_tokens = 2048;
  std::chrono::seconds query_timeout{60};
};

struct ChatTurn {
  // Everything appended to the transcript during the turn, in order.
  std::vector<ChatMessage> new_messages;
  std::optional<ResolutionOutcome> resolution;
  std::optional<GeneratedQuery> generated;
};

struct RunOutcome {
  results::ResultTable table;
  std::string summary;
  // Set when the summary could not be produced.
  std::string summary_error;
  // Endpoint rejection or timeout text; the table is empty in that case.
  std::string endpoint_error;
  std::optional<ErrorCode> endpoint_error_code;
};

struct QueryBlock {
  std::string query;
  std::string explanation;
  int total_blocks = 0;
};

// First ```sparql (or unlabelled ```) block in `reply`, minus the one
// newline before its closing fence. The explanation is the trimmed text
// after that fence.
std::optional<QueryBlock> ExtractQueryBlock(std::string_view reply);

// Text returned to the LLM for each lookup.
std::string FormatEntitySearch(std::string_view term,
                               const std::vector<kg::EntityMatch>& matches);
std::string FormatProperties(const EntityId& entity,
                             const kg::PropertyList& properties);
std::string FormatTraversal(const EntityId& entity, const PropertyId& property,
                            const std::vector<kg::EntityMatch>& tails);
std::string CorrectionMessage(std::string_view problem);

// Drives one session through the protocol. The engine itself is stateless
// and may be shared; each SessionState must be used by one caller at a
// time.
class ProtocolEngine {
 public:
  ProtocolEngine(const prompts::PromptLibrary& prompts, llm::LlmClient& llm,
                 Clock& clock, EngineConfig config = {});

  // Chatting session whose transcript holds the rendered system prompt.
  SessionState NewSession(std::string id,
                          std::unique_ptr<kg::KgClient> kg) const;

  // One user turn. When the reply asks to build a query, continues through
  // resolution and generation before returning. Throws kEmptyInput,
  // kLlmUnavailable (transcript unchanged), kKgUnavailable (session back in
  // Chatting) and kNoQueryBlock.
  ChatTurn StepChat(SessionState& session, std::string_view user_text);

  // The ID loop. Requires kResolvingIds; leaves kGeneratingQuery.
  ResolutionOutcome RunIdResolution(SessionState& session);

  // Requires kGeneratingQuery; leaves kAwaitingUserRunDecision.
  GeneratedQuery GenerateQuery(SessionState& session);

  // Validates, executes, cleans and summarizes. Throws kInvalidQuery before
  // any network call when the text does not parse.
  RunOutcome RunQuery(SessionState& session, std::string_view query_text);

  const EngineConfig& config() const { return config_; }

 private:
  std::string Ask(SessionState& session);
  void Append(SessionState& session, Role role, std::string content,
              Visibility visibility,
              std::optional<Provenance> provenance = std::nullopt);
  std::string Dispatch(SessionState& session, const Directive& directive);
  void AbortToChatting(SessionState& session, const std::string& why);

  const prompts::PromptLibrary& prompts_;
  llm::LlmClient& llm_;
  Clock& clock_;
  EngineConfig config_;
};

}  // namespace linkq::protocol

#endif  // LINKQ_PROTOCOL_ENGINE_H_
