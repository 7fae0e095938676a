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

#include "linkq/service/session_service.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>

#include "linkq/error.h"
#include "linkq/service/json_views.h"
#include "linkq/text.h"
#include "support/fake_kg.h"
#include "support/replay_stack.h"
#include "support/test_data.h"

namespace linkq::service {
namespace {

using linkq::testing::ExampleQuery;
using linkq::testing::ReplayStack;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidState;
}

TEST(SessionServiceTest, CreateStartsWithOneDatedSystemMessage) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  EXPECT_EQ(id.size(), 16u);
  auto all = stack.service().GetTranscript(id, true);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].role, Role::kSystem);
  EXPECT_TRUE(Contains(all[0].content, "2026-10-16"));
  EXPECT_TRUE(stack.service().GetTranscript(id, false).empty());
  EXPECT_NE(stack.service().CreateSession(), id);
}

TEST(SessionServiceTest, UnknownSessionIsNotFound) {
  ReplayStack stack("mountains");
  EXPECT_EQ(CodeOf([&] { stack.service().Snapshot("nope"); }), ErrorCode::kNotFound);
  EXPECT_EQ(CodeOf([&] { stack.service().PostMessage("nope", "hi"); }),
            ErrorCode::kNotFound);
}

TEST(SessionServiceTest, PreviewMountainsQuery) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  QueryPreviewBundle bundle = stack.service().PreviewQuery(id, ExampleQuery("mountains"));
  ASSERT_TRUE(bundle.valid());
  ASSERT_EQ(bundle.rows.size(), 3u);
  EXPECT_EQ(bundle.rows[0].id, "Q8502");
  EXPECT_EQ(bundle.rows[0].label, "mountain");
  EXPECT_EQ(bundle.rows[1].id, "P31");
  EXPECT_EQ(bundle.rows[2].kind, IdKind::kProperty);
  ASSERT_TRUE(bundle.graph);
  EXPECT_EQ(bundle.graph->nodes.size(), 3u);
  EXPECT_EQ(bundle.graph->edges.size(), 2u);
  auto json = ToJson(bundle);
  EXPECT_EQ(json["validation"]["ok"], true);
  EXPECT_EQ(json["entityRelationRows"][0]["provenance"], "kg");
}

TEST(SessionServiceTest, PreviewInvalidQueryReportsPosition) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  QueryPreviewBundle bundle =
      stack.service().PreviewQuery(id, "SELECT ?x WHERE {\n  ?x wdt:P31 wd:Q5 ");
  EXPECT_FALSE(bundle.valid());
  EXPECT_FALSE(bundle.graph);
  EXPECT_EQ(bundle.syntax_error->position.line, 2u);
  EXPECT_EQ(stack.transport().call_count(), 0u);
}

TEST(SessionServiceTest, PreviewWithoutIdsNeedsNoLookup) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  QueryPreviewBundle bundle =
      stack.service().PreviewQuery(id, "SELECT ?s WHERE { ?s ?p ?o } LIMIT 1");
  EXPECT_TRUE(bundle.valid());
  EXPECT_TRUE(bundle.rows.empty());
  EXPECT_EQ(bundle.graph->nodes.size(), 2u);
  EXPECT_EQ(stack.transport().call_count(), 0u);
}

TEST(SessionServiceTest, PreviewSurvivesLabelOutage) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  // Not recorded, so the label lookup fails like an outage would.
  QueryPreviewBundle bundle =
      stack.service().PreviewQuery(id, "SELECT ?x WHERE { ?x wdt:P17 wd:Q183 }");
  EXPECT_TRUE(bundle.valid());
  EXPECT_FALSE(bundle.labels_error.empty());
  ASSERT_EQ(bundle.rows.size(), 2u);
  EXPECT_TRUE(bundle.rows[0].missing);
  EXPECT_EQ(bundle.graph->edges.size(), 1u);
}

TEST(SessionServiceTest, RunMountainsQuery) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  RunResult run = stack.service().RunQuery(id, ExampleQuery("mountains"));
  const auto& table = run.outcome.table;
  EXPECT_EQ(table.columns,
            (std::vector<std::string>{"mountain", "mountainLabel", "height"}));
  ASSERT_EQ(table.rows.size(), 5u);
  EXPECT_EQ(table.rows[0], (std::vector<std::string>{"Q513", "Mount Everest", "8848.86"}));
  EXPECT_EQ(stack.llm().call_count(), 1u);
  EXPECT_TRUE(Contains(run.outcome.summary, "Mount Everest"));
  EXPECT_EQ(run.csv_path, "/sessions/" + id + "/results/latest.csv");
  std::string csv = stack.service().LatestCsv(id);
  EXPECT_EQ(csv.substr(0, 30), "mountain,mountainLabel,height\r");
  auto history = stack.service().GetHistory(id);
  ASSERT_EQ(history.size(), 1u);
  EXPECT_EQ(history[0].origin, protocol::QueryOrigin::kUserEdited);
}

TEST(SessionServiceTest, EmptyResultAsksForDiagnosis) {
  ReplayStack stack("kg_probes");
  std::string id = stack.service().CreateSession();
  RunResult run =
      stack.service().RunQuery(id, "SELECT ?x WHERE { wd:Q312 wdt:P999999 ?x }");
  EXPECT_TRUE(run.outcome.table.rows.empty());
  auto prompt = stack.llm().call_log().at(0).messages.at(0).content;
  EXPECT_TRUE(Contains(prompt, stack.prompts().Body(prompts::TemplateId::kSummaryTaskDiagnose)));
  EXPECT_TRUE(Contains(prompt, "(no rows)"));
  EXPECT_EQ(stack.service().LatestCsv(id), "x\r\n");
}

TEST(SessionServiceTest, CsvBeforeAnyRunIsNotFound) {
  ReplayStack stack("mountains");
  std::string id = stack.service().CreateSession();
  EXPECT_EQ(CodeOf([&] { stack.service().LatestCsv(id); }), ErrorCode::kNotFound);
}

// Service over the in-memory KG, for flows without recorded traffic.
class FakeServiceTest : public ::testing::Test {
 protected:
  FakeServiceTest()
      : engine_(prompts_, llm_, clock_),
        service_(engine_, [] { return std::make_unique<linkq::testing::FakeKg>(); },
                 clock_) {}

  prompts::PromptLibrary prompts_ = prompts::PromptLibrary::LoadDefault();
  llm::ScriptedLlm llm_;
  ManualClock clock_{ParseDate("2026-10-16")};
  protocol::ProtocolEngine engine_;
  SessionService service_;
};

constexpr const char* kGenerated = "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 } LIMIT 3";
constexpr const char* kEdited = "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 } LIMIT 10";

TEST_F(FakeServiceTest, HistoryKeepsGeneratedAndEditedQueries) {
  llm_.Push("BUILD QUERY");
  llm_.Push("STOP");
  llm_.Push(std::string("```sparql\n") + kGenerated + "\n```");
  llm_.Push("summary");
  std::string id = service_.CreateSession();
  ChatDelta delta = service_.PostMessage(id, "List some humans");
  ASSERT_TRUE(delta.generated);
  EXPECT_EQ(delta.state, protocol::ProtocolState::kAwaitingUserRunDecision);
  service_.SetEditorQuery(id, kEdited);
  EXPECT_EQ(service_.Snapshot(id).generated->query, kGenerated)
      << "editing never replaces the generated query";
  service_.RunQuery(id, kEdited);
  auto history = service_.GetHistory(id);
  ASSERT_EQ(history.size(), 2u);
  EXPECT_EQ(history[0].query, kGenerated);
  EXPECT_EQ(history[0].origin, protocol::QueryOrigin::kLlmGenerated);
  EXPECT_FALSE(history[0].executed);
  EXPECT_EQ(history[1].query, kEdited);
  EXPECT_EQ(history[1].origin, protocol::QueryOrigin::kUserEdited);
  EXPECT_TRUE(history[1].executed);
  EXPECT_EQ(ToJson(history[0])["origin"], "llmGenerated");
}

TEST_F(FakeServiceTest, IdleSessionsAreEvicted) {
  std::string old_id = service_.CreateSession();
  clock_.Advance(std::chrono::hours(23));
  std::string fresh = service_.CreateSession();
  clock_.Advance(std::chrono::hours(2));
  EXPECT_EQ(service_.EvictIdle(), 1u);
  EXPECT_EQ(service_.session_count(), 1u);
  EXPECT_EQ(CodeOf([&] { service_.Snapshot(old_id); }), ErrorCode::kNotFound);
  EXPECT_EQ(service_.Snapshot(fresh).id, fresh);
}

class PersistingServiceTest : public FakeServiceTest {
 protected:
  static std::string Dir() {
    static std::string dir =
        (std::filesystem::temp_directory_path() / "linkq_persist_test").string();
    return dir;
  }
  void SetUp() override {
    std::filesystem::remove_all(Dir());
    std::filesystem::create_directories(Dir());
  }
  void TearDown() override { std::filesystem::remove_all(Dir()); }
};

TEST_F(PersistingServiceTest, AppendsMessagesHistoryAndRuns) {
  SessionService service(engine_, [] { return std::make_unique<linkq::testing::FakeKg>(); },
                         clock_, {std::chrono::hours(24), Dir()});
  llm_.Push("Hello");
  llm_.Push("summary");
  std::string id = service.CreateSession();
  service.PostMessage(id, "hi");
  service.RunQuery(id, kGenerated);
  std::ifstream in(Dir() + "/" + id + ".jsonl");
  std::map<std::string, int> counts;
  std::string line;
  while (std::getline(in, line)) ++counts[nlohmann::json::parse(line)["type"]];
  EXPECT_EQ(counts["message"], 4);  // system prompt, user, reply, summary
  EXPECT_EQ(counts["history"], 1);
  EXPECT_EQ(counts["run"], 1);
}

TEST(HttpStatusTest, ErrorCodesMapToStatuses) {
  EXPECT_EQ(HttpStatusFor(ErrorCode::kNotFound), 404);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kInvalidState), 409);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kEmptyInput), 400);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kInvalidQuery), 400);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kLlmUnavailable), 502);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kTimeout), 504);
}

}  // namespace
}  // namespace linkq::service
