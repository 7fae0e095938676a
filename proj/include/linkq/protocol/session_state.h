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

#ifndef LINKQ_PROTOCOL_SESSION_STATE_H_
#define LINKQ_PROTOCOL_SESSION_STATE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/chat.h"
#include "linkq/clock.h"
#include "linkq/kg/kg_client.h"
#include "linkq/kg/types.h"
#include "linkq/protocol/directive.h"
#include "linkq/protocol/state_machine.h"
#include "linkq/results/result_table.h"

namespace linkq::protocol {

struct TraversalRecord {
  EntityId head;
  PropertyId property;
  EntityId tail;
  friend bool operator==(const TraversalRecord&, const TraversalRecord&) = default;
};

struct SearchLogEntry {
  Directive directive;
  // Exact text sent back to the LLM.
  std::string response;
};

// Identifiers the KG itself returned during resolution. Nothing the LLM
// writes is added here directly.
struct ResolvedContext {
  std::map<std::string, kg::EntityMatch> entities;
  std::map<std::string, kg::PropertyRecord> properties;
  std::vector<TraversalRecord> traversals;
  std::vector<SearchLogEntry> search_log;

  bool has_ids() const { return !entities.empty() || !properties.empty(); }
};

struct ResolutionOutcome {
  int llm_calls = 0;
  int corrections = 0;
  bool stopped = false;          // the LLM said STOP
  bool stalled = false;          // iteration cap reached first
  bool no_ids_resolved = false;  // finished with an empty context
};

struct GeneratedQuery {
  std::string query;
  std::string explanation;
  // Additional fenced blocks that were ignored.
  int ignored_blocks = 0;
};

enum class QueryOrigin { kLlmGenerated, kUserEdited };
std::string_view QueryOriginName(QueryOrigin origin);

struct QueryHistoryEntry {
  std::string query;
  QueryOrigin origin = QueryOrigin::kLlmGenerated;
  Clock::time_point created_at{};
  bool executed = false;
};

// One conversation. Not internally synchronized: callers serialize access.
struct SessionState {
  std::string id;
  StateMachine machine;
  std::vector<ChatMessage> transcript;
  ResolvedContext context;
  std::optional<ResolutionOutcome> last_resolution;
  // Latest LLM-generated query. Separate from editor_query so a generation
  // never replaces what the user is editing.
  std::optional<GeneratedQuery> generated_query;
  std::string editor_query;
  std::vector<QueryHistoryEntry> history;
  std::optional<results::ResultTable> latest_table;
  std::unique_ptr<kg::KgClient> kg;
  Clock::time_point created_at{};
  Clock::time_point last_active{};

  ProtocolState state() const { return machine.state(); }
  // Messages with Visibility::kShown, or all of them.
  std::vector<ChatMessage> Transcript(bool include_internal) const;
  // Content of the most recent shown user message, or "".
  std::string LastUserText() const;
};

}  // namespace linkq::protocol

#endif  // LINKQ_PROTOCOL_SESSION_STATE_H_
