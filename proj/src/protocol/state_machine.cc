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

#include "linkq/protocol/state_machine.h"

#include "linkq/error.h"

namespace linkq::protocol {

std::string_view StateName(ProtocolState state) {
  switch (state) {
    case ProtocolState::kChatting: return "Chatting";
    case ProtocolState::kResolvingIds: return "ResolvingIds";
    case ProtocolState::kGeneratingQuery: return "GeneratingQuery";
    case ProtocolState::kAwaitingUserRunDecision: return "AwaitingUserRunDecision";
    case ProtocolState::kExecutingQuery: return "ExecutingQuery";
    case ProtocolState::kSummarizing: return "Summarizing";
  }
  return "Unknown";
}

std::string_view EventName(ProtocolEvent event) {
  switch (event) {
    case ProtocolEvent::kBuildQuery: return "BuildQuery";
    case ProtocolEvent::kSearchDirective: return "SearchDirective";
    case ProtocolEvent::kResolutionDone: return "ResolutionDone";
    case ProtocolEvent::kQueryGenerated: return "QueryGenerated";
    case ProtocolEvent::kUserContinues: return "UserContinues";
    case ProtocolEvent::kRunQuery: return "RunQuery";
    case ProtocolEvent::kResultsReady: return "ResultsReady";
    case ProtocolEvent::kSummaryDone: return "SummaryDone";
    case ProtocolEvent::kAbort: return "Abort";
  }
  return "Unknown";
}

std::optional<ProtocolState> NextState(ProtocolState from, ProtocolEvent event) {
  using S = ProtocolState;
  using E = ProtocolEvent;
  switch (from) {
    case S::kChatting:
      if (event == E::kBuildQuery) return S::kResolvingIds;
      // Running a query typed into the editor needs no generation step.
      if (event == E::kRunQuery) return S::kExecutingQuery;
      break;
    case S::kResolvingIds:
      if (event == E::kSearchDirective) return S::kResolvingIds;
      if (event == E::kResolutionDone) return S::kGeneratingQuery;
      if (event == E::kAbort) return S::kChatting;
      break;
    case S::kGeneratingQuery:
      if (event == E::kQueryGenerated) return S::kAwaitingUserRunDecision;
      if (event == E::kAbort) return S::kChatting;
      break;
    case S::kAwaitingUserRunDecision:
      if (event == E::kRunQuery) return S::kExecutingQuery;
      if (event == E::kUserContinues) return S::kChatting;
      break;
    case S::kExecutingQuery:
      if (event == E::kResultsReady) return S::kSummarizing;
      if (event == E::kAbort) return S::kChatting;
      break;
    case S::kSummarizing:
      if (event == E::kSummaryDone) return S::kChatting;
      break;
  }
  return std::nullopt;
}

void StateMachine::Apply(ProtocolEvent event) {
  std::optional<ProtocolState> next = NextState(state_, event);
  if (!next) {
    throw Error(ErrorCode::kInvalidState,
                "event " + std::string(EventName(event)) + " is not allowed in " +
                    std::string(StateName(state_)));
  }
  state_ = *next;
}

void StateMachine::Fire(ProtocolEvent event) {
  if (event == ProtocolEvent::kRunQuery) {
    throw Error(ErrorCode::kInvalidState,
                "running a query requires a validated query");
  }
  Apply(event);
}

void StateMachine::BeginExecution(const sparql::ValidatedQuery&) {
  Apply(ProtocolEvent::kRunQuery);
}

}  // namespace linkq::protocol
