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

#ifndef LINKQ_TESTS_SUPPORT_TEST_DATA_H_
#define LINKQ_TESTS_SUPPORT_TEST_DATA_H_

#include <string>
#include <vector>

namespace linkq::testing {

std::string ReadFile(const std::string& path);

// tests/data/<relative>
std::string TestDataPath(const std::string& relative);
std::string ReadTestData(const std::string& relative);

// The four few-shot queries from the query-generation prompt, as checked
// into tests/data/queries (trailing newline removed).
std::string ExampleQuery(const std::string& name);
const std::vector<std::string>& ExampleQueryNames();

// tests/fixtures/<scenario>
std::string FixturePath(const std::string& scenario);

// Independent identifier oracle: a plain regex over the query text for
// wd:Qn and wdt:/p:/ps:/pq: Pn, deduplicated in first-appearance order.
struct RegexIds {
  std::vector<std::string> entities;
  std::vector<std::string> properties;
};
RegexIds RegexExtractIds(const std::string& query);

}  // namespace linkq::testing

#endif  // LINKQ_TESTS_SUPPORT_TEST_DATA_H_
