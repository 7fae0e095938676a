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

#include <gtest/gtest.h>

#include "linkq/error.h"
#include "linkq/text.h"
#include "support/test_data.h"

namespace linkq::prompts {
namespace {

using linkq::testing::ReadTestData;

results::ResultTable Table(std::size_t rows) {
  results::ResultTable table;
  table.columns = {"item", "value"};
  for (std::size_t i = 0; i < rows; ++i) {
    table.rows.push_back({"Q" + std::to_string(i + 1), "v" + std::to_string(i)});
  }
  table.source_row_count = rows;
  return table;
}

class PromptLibraryTest : public ::testing::Test {
 protected:
  PromptLibrary library_ = PromptLibrary::LoadDefault();
};

TEST_F(PromptLibraryTest, BaseTemplatesMatchGoldenFiles) {
  for (TemplateId id : {TemplateId::kInitialSystem, TemplateId::kIdIdentification,
                        TemplateId::kQueryGeneration}) {
    std::string file(TemplateFileName(id));
    EXPECT_EQ(library_.Body(id), ReadTestData("golden_prompts/" + file)) << file;
  }
}

TEST_F(PromptLibraryTest, PlaceholdersPerTemplate) {
  EXPECT_EQ(library_.Placeholders(TemplateId::kInitialSystem),
            std::vector<std::string>{"date"});
  EXPECT_TRUE(library_.Placeholders(TemplateId::kIdIdentification).empty());
  EXPECT_EQ(library_.Placeholders(TemplateId::kQueryGeneration),
            std::vector<std::string>{"text"});
  EXPECT_EQ(library_.Placeholders(TemplateId::kResultsSummary),
            (std::vector<std::string>{"question", "query", "results", "task"}));
}

TEST_F(PromptLibraryTest, RenderSubstitutesAndKeepsSparqlBraces) {
  std::string rendered =
      library_.Render(TemplateId::kInitialSystem, {{"date", "2026-10-16"}});
  EXPECT_TRUE(Contains(rendered, "2026-10-16"));
  EXPECT_FALSE(Contains(rendered, "{date}"));

  std::string query = library_.Render(
      TemplateId::kQueryGeneration, {{"text", "Who founded Apple? {date}"}});
  EXPECT_TRUE(Contains(query, "Who founded Apple? {date}"))
      << "substituted values are not rescanned";
  EXPECT_TRUE(Contains(query, "SELECT"));
  EXPECT_TRUE(Contains(query, "WHERE {"));
}

TEST_F(PromptLibraryTest, MissingBindingThrows) {
  try {
    library_.Render(TemplateId::kQueryGeneration, {{"date", "x"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingBinding);
    EXPECT_TRUE(Contains(e.what(), "text"));
  }
}

TEST_F(PromptLibraryTest, RenderIsPure) {
  Bindings b{{"text", "q"}};
  std::string first = library_.Render(TemplateId::kQueryGeneration, b);
  EXPECT_EQ(library_.Render(TemplateId::kQueryGeneration, b), first);
  EXPECT_EQ(library_.Body(TemplateId::kQueryGeneration),
            ReadTestData("golden_prompts/query_generation.txt"));
}

TEST_F(PromptLibraryTest, SummaryPromptCapsRows) {
  std::string prompt = library_.RenderSummaryPrompt("q", "SELECT ?x {}", Table(500));
  EXPECT_TRUE(Contains(prompt, "Q50 | v49"));
  EXPECT_FALSE(Contains(prompt, "Q51 | v50"));
  EXPECT_TRUE(Contains(prompt, "(truncated: showing the first 50 of 500 rows)"));
  EXPECT_TRUE(Contains(prompt, library_.Body(TemplateId::kSummaryTaskSummarize)));
}

TEST_F(PromptLibraryTest, SmallTableIsNotTruncated) {
  std::string prompt = library_.RenderSummaryPrompt("q", "SELECT", Table(3));
  EXPECT_TRUE(Contains(prompt, "item | value\nQ1 | v0\nQ2 | v1\nQ3 | v2"));
  EXPECT_FALSE(Contains(prompt, "truncated"));
}

TEST_F(PromptLibraryTest, EmptyTableSelectsDiagnosis) {
  std::string prompt = library_.RenderSummaryPrompt("Who?", "SELECT", Table(0));
  EXPECT_TRUE(Contains(prompt, "(no rows)"));
  EXPECT_TRUE(Contains(prompt, library_.Body(TemplateId::kSummaryTaskDiagnose)));
  EXPECT_FALSE(Contains(prompt, library_.Body(TemplateId::kSummaryTaskSummarize)));
}

TEST_F(PromptLibraryTest, EndpointErrorSelectsDiagnosis) {
  std::string prompt =
      library_.RenderSummaryPrompt("Who?", "SELECT", Table(0), "offset out of range");
  EXPECT_TRUE(Contains(prompt, "offset out of range"));
  EXPECT_TRUE(Contains(prompt, library_.Body(TemplateId::kSummaryTaskDiagnose)));
}

TEST(PromptLibraryLoadTest, MissingDirectoryIsNotFound) {
  try {
    PromptLibrary::Load("/nonexistent/prompt/dir");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(FindPlaceholdersTest, OnlyIdentifiersCount) {
  EXPECT_EQ(FindPlaceholders("{a} { b } {?x} {a} {c_1}{}"),
            (std::vector<std::string>{"a", "c_1"}));
}

}  // namespace
}  // namespace linkq::prompts
