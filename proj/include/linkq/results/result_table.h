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

#ifndef LINKQ_RESULTS_RESULT_TABLE_H_
#define LINKQ_RESULTS_RESULT_TABLE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace linkq::results {

// Cleaned query results. Every row has exactly columns.size() cells.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::size_t source_row_count = 0;

  friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

}  // namespace linkq::results

#endif  // LINKQ_RESULTS_RESULT_TABLE_H_
