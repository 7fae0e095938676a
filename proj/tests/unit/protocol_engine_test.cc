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

#include "linkq/protocol/engine.h"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "linkq/clock.h"
#include "linkq/error.h"
#include "linkq/llm/llm_client.h"
#include "linkq/prompts/prompt_library.h"
#include "linkq/protocol/state_machine.h"
#include "linkq/text.h"
#include "support/fake_kg.h"
#include "support/oracles.h"

namespace linkq::protocol {
namespace {

using linkq::testing::FakeKg;
using linkq::testing::GroundingViolation;
using linkq::testing::ProtocolLlm;
using linkq::testing::RandomResolutionScript;
using S = ProtocolState;
using E = ProtocolEvent;

constexpr const char* kQuery = linkq::testing::kHarnessQuery;
const std::string kFenced = linkq::testing::ProtocolLlm::FencedQuery();

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidState;
}

TEST(StateMachineTest, TransitionTableIsExactlyTheAllowedSet) {
  const std::map<std::pair<S, E>, S> allowed = {
      {{S::kChatting, E::kBuildQuery}, S::kResolvingIds},
      {{S::kChatting, E::kRunQuery}, S::kExecutingQuery},
      {{S::kResolvingIds, E::kSearchDirective}, S::kResolvingIds},
      {{S::kResolvingIds, E::kResolutionDone}, S::kGeneratingQuery},
      {{S::kResolvingIds, E::kAbort}, S::kChatting},
      {{S::kGeneratingQuery, E::kQueryGenerated}, S::kAwaitingUserRunDecision},
      {{S::kGeneratingQuery, E::kAbort}, S::kChatting},
      {{S::kAwaitingUserRunDecision, E::kRunQuery}, S::kExecutingQuery},
      {{S::kAwaitingUserRunDecision, E::kUserContinues}, S::kChatting},
      {{S::kExecutingQuery, E::kResultsReady}, S::kSummarizing},
      {{S::kExecutingQuery, E::kAbort}, S::kChatting},
      {{S::kSummarizing, E::kSummaryDone}, S::kChatting},
  };
  int checked = 0;
  for (S from : kAllStates) {
    for (E event : kAllEvents) {
      auto it = allowed.find({from, event});
      std::optional<S> expected;
      if (it != allowed.end()) expected = it->second;
      EXPECT_EQ(NextState(from, event), expected)
          << StateName(from) << " + " << EventName(event);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 54);
}

TEST(StateMachineTest, ExecutionNeedsAValidatedQuery) {
  StateMachine machine;
  EXPECT_EQ(CodeOf([&] { machine.Fire(E::kRunQuery); }), ErrorCode::kInvalidState);
  EXPECT_EQ(machine.state(), S::kChatting);
  auto query = std::get<sparql::ValidatedQuery>(sparql::ValidatedQuery::Check(kQuery));
  machine.BeginExecution(query);
  EXPECT_EQ(machine.state(), S::kExecutingQuery);
  EXPECT_EQ(CodeOf([&] { machine.BeginExecution(query); }), ErrorCode::kInvalidState);
  EXPECT_EQ(CodeOf([&] { machine.Fire(E::kSummaryDone); }), ErrorCode::kInvalidState);
}

TEST(QueryBlockTest, FirstSparqlOrBareFenceWins) {
  auto block = ExtractQueryBlock("Here:\n```SPARQL\nSELECT 1\n```\nWhy.\n```sparql\nSELECT 2\n```");
  ASSERT_TRUE(block);
  EXPECT_EQ(block->query, "SELECT 1");
  EXPECT_EQ(block->total_blocks, 2);
  auto bare = ExtractQueryBlock("```\r\nASK {}\r\n```  \n  explained  ");
  ASSERT_TRUE(bare);
  EXPECT_EQ(bare->query, "ASK {}");
  EXPECT_EQ(bare->explanation, "explained");
  EXPECT_FALSE(ExtractQueryBlock("```python\nprint(1)\n```"));
  EXPECT_FALSE(ExtractQueryBlock("no fences at all"));
}

TEST(FormatTest, SearchResponsesAreReadable) {
  std::vector<kg::EntityMatch> matches = {{EntityId("Q312"), "Apple Inc.", "company", 0}};
  EXPECT_EQ(FormatEntitySearch("Apple", matches),
            "ENTITY SEARCH results for \"Apple\":\n- Q312: Apple Inc. (company)");
  EXPECT_TRUE(Contains(FormatEntitySearch("zz", {}), "zz"));
  for (const char* form : {"ENTITY SEARCH:", "PROPERTIES SEARCH:",
                           "ENTITY PROPERTY SEARCH:", "STOP"}) {
    EXPECT_TRUE(Contains(CorrectionMessage("bad"), form));
  }
}

class EngineTest : public ::testing::Test {
 protected:
  SessionState NewSession() {
    auto kg = std::make_unique<FakeKg>();
    kg_ = kg.get();
    return engine_.NewSession("s1", std::move(kg));
  }

  prompts::PromptLibrary prompts_ = prompts::PromptLibrary::LoadDefault();
  ProtocolLlm llm_;
  ManualClock clock_{ParseDate("2026-10-16")};
  ProtocolEngine engine_{prompts_, llm_, clock_};
  FakeKg* kg_ = nullptr;
};

TEST_F(EngineTest, NewSessionStartsWithDatedSystemPrompt) {
  SessionState s = NewSession();
  ASSERT_EQ(s.transcript.size(), 1u);
  EXPECT_EQ(s.transcript[0].role, Role::kSystem);
  EXPECT_EQ(s.transcript[0].visibility, Visibility::kInternalProtocol);
  EXPECT_TRUE(Contains(s.transcript[0].content, "2026-10-16"));
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, ChatWithoutBuildQueryStaysChatting) {
  SessionState s = NewSession();
  llm_.script = {"Hello! What would you like to know?"};
  ChatTurn turn = engine_.StepChat(s, "hi");
  EXPECT_EQ(s.state(), S::kChatting);
  EXPECT_FALSE(turn.generated);
  ASSERT_EQ(turn.new_messages.size(), 2u);
  EXPECT_EQ(turn.new_messages[1].visibility, Visibility::kShown);
  EXPECT_EQ(kg_->calls, 0);
}

TEST_F(EngineTest, DirectiveWhileChattingIsIgnored) {
  SessionState s = NewSession();
  llm_.script = {"ENTITY SEARCH: Apple"};
  engine_.StepChat(s, "hi");
  EXPECT_EQ(s.state(), S::kChatting);
  EXPECT_EQ(kg_->calls, 0);
}

TEST_F(EngineTest, EmptyInputIsRejected) {
  SessionState s = NewSession();
  EXPECT_EQ(CodeOf([&] { engine_.StepChat(s, " \n\t"); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(s.transcript.size(), 1u);
  EXPECT_EQ(llm_.calls, 0);
}

TEST_F(EngineTest, LlmFailureRollsBackUserMessage) {
  SessionState s = NewSession();
  llm_.unavailable_when_empty = true;
  EXPECT_EQ(CodeOf([&] { engine_.StepChat(s, "hi"); }), ErrorCode::kLlmUnavailable);
  EXPECT_EQ(s.transcript.size(), 1u);
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, FullResolutionAndGeneration) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "ENTITY SEARCH: Apple", "PROPERTIES SEARCH: Q1",
                 "ENTITY PROPERTY SEARCH: Q1 P112", "STOP"};
  ChatTurn turn = engine_.StepChat(s, "Who founded Apple?");
  ASSERT_TRUE(turn.resolution && turn.generated);
  EXPECT_TRUE(turn.resolution->stopped);
  EXPECT_FALSE(turn.resolution->stalled);
  EXPECT_EQ(turn.resolution->llm_calls, 4);
  EXPECT_EQ(turn.generated->query, std::string(kQuery));
  EXPECT_EQ(turn.generated->explanation, "Lists humans.");
  EXPECT_EQ(s.state(), S::kAwaitingUserRunDecision);
  EXPECT_EQ(s.context.search_log.size(), 3u);
  EXPECT_EQ(s.context.traversals.size(), 1u);
  ASSERT_EQ(s.history.size(), 1u);
  EXPECT_EQ(s.history[0].origin, QueryOrigin::kLlmGenerated);
  // The bare BUILD QUERY reply and all search traffic stay internal.
  auto shown = s.Transcript(false);
  ASSERT_EQ(shown.size(), 2u);
  EXPECT_EQ(shown[0].content, "Who founded Apple?");
  EXPECT_TRUE(Contains(shown[1].content, "```sparql"));
}

TEST_F(EngineTest, ImmediateStopIsFlagged) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "STOP"};
  ChatTurn turn = engine_.StepChat(s, "q");
  EXPECT_TRUE(turn.resolution->stopped);
  EXPECT_TRUE(turn.resolution->no_ids_resolved);
  EXPECT_TRUE(turn.generated);
}

TEST_F(EngineTest, IterationCapStopsAfterFifteenCalls) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY"};
  llm_.fallback = "ENTITY SEARCH: mountain";
  ChatTurn turn = engine_.StepChat(s, "q");
  EXPECT_EQ(turn.resolution->llm_calls, 15);
  EXPECT_TRUE(turn.resolution->stalled);
  EXPECT_FALSE(turn.resolution->stopped);
  EXPECT_EQ(llm_.calls, 1 + 15 + 1);
  EXPECT_EQ(kg_->calls, 15);
  EXPECT_TRUE(turn.generated);
}

TEST_F(EngineTest, ProseIsCorrectedTwiceThenTreatedAsStop) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "I think", "PROPERTIES SEARCH: Apple", "BUILD QUERY",
                 "ENTITY SEARCH: never reached"};
  ChatTurn turn = engine_.StepChat(s, "q");
  EXPECT_EQ(turn.resolution->corrections, 2);
  EXPECT_EQ(turn.resolution->llm_calls, 3);
  EXPECT_FALSE(turn.resolution->stopped);
  EXPECT_FALSE(turn.resolution->stalled);
  EXPECT_EQ(kg_->calls, 0);
}

TEST_F(EngineTest, UnknownEntityIsToldToTheLlm) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "PROPERTIES SEARCH: Q999999", "STOP"};
  ChatTurn turn = engine_.StepChat(s, "q");
  ASSERT_EQ(s.context.search_log.size(), 1u);
  EXPECT_TRUE(Contains(s.context.search_log[0].response, "does not exist"));
  EXPECT_FALSE(s.context.has_ids());
}

TEST_F(EngineTest, KgOutageAbortsToChatting) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "ENTITY SEARCH: Apple"};
  kg_->fail_with = ErrorCode::kKgUnavailable;
  EXPECT_EQ(CodeOf([&] { engine_.StepChat(s, "q"); }), ErrorCode::kKgUnavailable);
  EXPECT_EQ(s.state(), S::kChatting);
  EXPECT_EQ(s.transcript.back().visibility, Visibility::kShown);
  EXPECT_EQ(s.transcript.back().role, Role::kSystem);
}

TEST_F(EngineTest, MissingQueryBlockRetriesOnce) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "STOP"};
  llm_.query_replies = {"I cannot write it", kFenced};
  ChatTurn turn = engine_.StepChat(s, "q");
  EXPECT_TRUE(turn.generated);
  EXPECT_EQ(llm_.generation_calls, 2);
}

TEST_F(EngineTest, MissingQueryBlockTwiceFails) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "STOP"};
  llm_.query_replies = {"no", "still no"};
  EXPECT_EQ(CodeOf([&] { engine_.StepChat(s, "q"); }), ErrorCode::kNoQueryBlock);
  EXPECT_EQ(s.state(), S::kChatting);
  EXPECT_TRUE(s.history.empty());
}

TEST_F(EngineTest, SecondFencedBlockIsIgnored) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "STOP"};
  llm_.query_replies = {kFenced + "\n```sparql\nASK { ?s ?p ?o }\n```"};
  ChatTurn turn = engine_.StepChat(s, "q");
  EXPECT_EQ(turn.generated->ignored_blocks, 1);
  EXPECT_EQ(turn.generated->query, std::string(kQuery));
}

TEST_F(EngineTest, ChattingAfterGenerationReturnsToChatting) {
  SessionState s = NewSession();
  llm_.script = {"BUILD QUERY", "STOP", "Sure, ask away."};
  engine_.StepChat(s, "q");
  ASSERT_EQ(s.state(), S::kAwaitingUserRunDecision);
  engine_.StepChat(s, "actually, something else");
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, InvalidQueryNeverReachesTheKg) {
  SessionState s = NewSession();
  EXPECT_EQ(CodeOf([&] { engine_.RunQuery(s, "SELECT ?x WHERE { ?x wdt:P31 "); }),
            ErrorCode::kInvalidQuery);
  EXPECT_EQ(kg_->calls, 0);
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, RunQuerySummarizesAndRecordsHistory) {
  SessionState s = NewSession();
  kg_->next_result.vars = {"item"};
  kg_->next_result.bindings = {{{"item", {"uri", "http://www.wikidata.org/entity/Q42"}}}};
  llm_.fallback = "One human: Q42.";
  RunOutcome out = engine_.RunQuery(s, kQuery);
  EXPECT_EQ(out.table.rows, (std::vector<std::vector<std::string>>{{"Q42"}}));
  EXPECT_EQ(out.summary, "One human: Q42.");
  EXPECT_EQ(s.state(), S::kChatting);
  ASSERT_EQ(s.history.size(), 1u);
  EXPECT_EQ(s.history[0].origin, QueryOrigin::kUserEdited);
  EXPECT_TRUE(s.history[0].executed);
}

TEST_F(EngineTest, RejectedQueryIsReportedAndDiagnosed) {
  SessionState s = NewSession();
  kg_->next_sparql_error = Error(ErrorCode::kQueryRejected, "bad offset");
  llm_.fallback = "The offset is too large.";
  RunOutcome out = engine_.RunQuery(s, kQuery);
  EXPECT_EQ(out.endpoint_error, "bad offset");
  EXPECT_EQ(out.endpoint_error_code, ErrorCode::kQueryRejected);
  EXPECT_TRUE(out.table.rows.empty());
  EXPECT_EQ(out.summary, "The offset is too large.");
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, SummaryFailureStillReturnsTable) {
  SessionState s = NewSession();
  kg_->next_result.vars = {"item"};
  llm_.unavailable_when_empty = true;
  RunOutcome out = engine_.RunQuery(s, kQuery);
  EXPECT_FALSE(out.summary_error.empty());
  EXPECT_EQ(s.state(), S::kChatting);
}

TEST_F(EngineTest, GroundingHoldsForRandomScripts) {
  std::mt19937 rng(15);
  for (int i = 0; i < 300; ++i) {
    llm_ = ProtocolLlm();
    llm_.script = RandomResolutionScript(rng);
    SessionState s = NewSession();
    ChatTurn turn = engine_.StepChat(s, "random question " + std::to_string(i));
    ASSERT_TRUE(turn.resolution);
    ASSERT_LE(turn.resolution->llm_calls, 15);
    ASSERT_LE(turn.resolution->corrections, 2);
    ASSERT_EQ(GroundingViolation(s, *kg_), "") << "case " << i;
    ASSERT_EQ(turn.resolution->no_ids_resolved, !s.context.has_ids());
  }
}

TEST_F(EngineTest, IdsCitedOnlyByTheLlmNeverEnterTheContext) {
  llm_.script = {"BUILD QUERY", "The founder is Q77777 via P112.",
                 "ENTITY PROPERTY SEARCH: Q77777 P2044", "PROPERTIES SEARCH: Q999999",
                 "STOP"};
  SessionState s = NewSession();
  engine_.StepChat(s, "q");
  EXPECT_EQ(GroundingViolation(s, *kg_), "");
  EXPECT_FALSE(s.context.entities.count("Q77777"));
  EXPECT_FALSE(s.context.entities.count("Q999999"));
  EXPECT_FALSE(s.context.properties.count("P112"));
  EXPECT_TRUE(s.context.traversals.empty());
}

TEST_F(EngineTest, GroundingOracleCatchesInventedIds) {
  llm_.script = {"BUILD QUERY", "ENTITY SEARCH: Apple", "STOP"};
  SessionState s = NewSession();
  engine_.StepChat(s, "q");
  ASSERT_EQ(GroundingViolation(s, *kg_), "");

  SessionState invented = NewSession();
  invented.context.entities.emplace("Q77777", kg::EntityMatch{EntityId("Q77777")});
  EXPECT_NE(GroundingViolation(invented, *kg_), "");

  SessionState altered = NewSession();
  llm_ = ProtocolLlm();
  llm_.script = {"BUILD QUERY", "ENTITY SEARCH: Apple", "STOP"};
  engine_.StepChat(altered, "q");
  altered.context.search_log[0].response += " (edited)";
  EXPECT_NE(GroundingViolation(altered, *kg_), "");

  SessionState traversal = NewSession();
  traversal.context.traversals.push_back(
      {EntityId("Q1"), PropertyId("P112"), EntityId("Q2")});
  EXPECT_NE(GroundingViolation(traversal, *kg_), "");
}

}  // namespace
}  // namespace linkq::protocol
