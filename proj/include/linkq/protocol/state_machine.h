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

#ifndef LINKQ_PROTOCOL_STATE_MACHINE_H_
#define LINKQ_PROTOCOL_STATE_MACHINE_H_

#include <array>
#include <optional>
#include <string_view>

#include "linkq/sparql/analysis.h"

namespace linkq::protocol {

enum class ProtocolState {
  kChatting,
  kResolvingIds,
  kGeneratingQuery,
  kAwaitingUserRunDecision,
  kExecutingQuery,
  kSummarizing,
};
inline constexpr std::array<ProtocolState, 6> kAllStates = {
    ProtocolState::kChatting,        ProtocolState::kResolvingIds,
    ProtocolState::kGeneratingQuery, ProtocolState::kAwaitingUserRunDecision,
    ProtocolState::kExecutingQuery,  ProtocolState::kSummarizing};

enum class ProtocolEvent {
  kBuildQuery,       // assistant asked to build a query
  kSearchDirective,  // one KG lookup answered
  kResolutionDone,   // STOP, cap reached, or corrections exhausted
  kQueryGenerated,
  kUserContinues,    // user chats on instead of running
  kRunQuery,         // needs a validated query, see BeginExecution
  kResultsReady,
  kSummaryDone,
  kAbort,            // upstream failure mid-protocol
};
inline constexpr std::array<ProtocolEvent, 9> kAllEvents = {
    ProtocolEvent::kBuildQuery,     ProtocolEvent::kSearchDirective,
    ProtocolEvent::kResolutionDone, ProtocolEvent::kQueryGenerated,
    ProtocolEvent::kUserContinues,  ProtocolEvent::kRunQuery,
    ProtocolEvent::kResultsReady,   ProtocolEvent::kSummaryDone,
    ProtocolEvent::kAbort};

std::string_view StateName(ProtocolState state);
std::string_view EventName(ProtocolEvent event);

// The transition table. nullopt means the event is illegal in `from`.
std::optional<ProtocolState> NextState(ProtocolState from, ProtocolEvent event);

class StateMachine {
 public:
  ProtocolState state() const { return state_; }

  // Applies any event except kRunQuery. Throws Error(kInvalidState) when the
  // table has no entry.
  void Fire(ProtocolEvent event);

  // The only way into kExecutingQuery; the argument proves the pending query
  // parsed.
  void BeginExecution(const sparql::ValidatedQuery& query);

 private:
  void Apply(ProtocolEvent event);

  ProtocolState state_ = ProtocolState::kChatting;
};

}  // namespace linkq::protocol

#endif  // LINKQ_PROTOCOL_STATE_MACHINE_H_
