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

#include "support/oracles.h"

#include "linkq/error.h"
#include "linkq/text.h"

namespace linkq::testing {

std::vector<std::vector<std::string>> ReadCsv(const std::string& text,
                                              std::string* error) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        i += 2;
      } else if (c == '"') {
        quoted = false;
        ++i;
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      record.push_back(field);
      field.clear();
      field_started = false;
      ++i;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      record.push_back(field);
      records.push_back(record);
      record.clear();
      field.clear();
      field_started = false;
      i += 2;
    } else {
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (error) {
    if (quoted) {
      *error = "unterminated quoted field";
    } else if (!field.empty() || !record.empty()) {
      *error = "missing final CRLF";
    }
  }
  return records;
}

results::ResultTable RandomCsvTable(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "Z", "0", " ", ",", "\"", "\r", "\n", "\r\n", "\"\"", "\xC3\xA9",
      "\xE5\xB1\xB1", "wd:Q5", "http://www.wikidata.org/entity/Q1", "\t", ";"};
  auto cell = [&] {
    std::string out;
    for (int n = rng() % 8; n > 0; --n) out += kPieces[rng() % kPieces.size()];
    return out;
  };
  results::ResultTable table;
  std::size_t cols = 1 + rng() % 5;
  for (std::size_t c = 0; c < cols; ++c) table.columns.push_back("c" + std::to_string(c));
  for (int r = rng() % 12; r > 0; --r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < cols; ++c) row.push_back(cell());
    table.rows.push_back(row);
  }
  table.source_row_count = table.rows.size();
  return table;
}

std::string GroundingViolation(const protocol::SessionState& s, const FakeKg& kg) {
  for (const auto& [id, match] : s.context.entities) {
    if (!kg.returned_entities.count(id)) return "entity not from KG: " + id;
  }
  for (const auto& [id, record] : s.context.properties) {
    if (!kg.returned_properties.count(id)) return "property not from KG: " + id;
  }
  for (const auto& t : s.context.traversals) {
    std::string key = t.head.str() + "|" + t.property.str() + "|" + t.tail.str();
    if (!kg.returned_tails.count(key)) return "traversal not from KG: " + key;
  }
  std::vector<std::string> kg_messages;
  for (const auto& m : s.transcript) {
    if (m.provenance == Provenance::kKg) kg_messages.push_back(m.content);
  }
  if (kg_messages.size() != s.context.search_log.size()) return "search log mismatch";
  for (std::size_t i = 0; i < kg_messages.size(); ++i) {
    if (kg_messages[i] != s.context.search_log[i].response) {
      return "KG response altered before reaching the LLM";
    }
  }
  return "";
}

std::vector<std::string> RandomResolutionScript(std::mt19937& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  auto q = [&] {
    static const char* kIds[] = {"Q1", "Q312", "Q77777", "Q999999", "Q5"};
    return std::string(kIds[pick(5)]);
  };
  auto p = [&] {
    static const char* kIds[] = {"P31", "P112", "P2044", "P12"};
    return std::string(kIds[pick(4)]);
  };
  std::vector<std::string> script = {"BUILD QUERY"};
  for (int n = pick(20); n > 0; --n) {
    switch (pick(9)) {
      case 0: script.push_back("ENTITY SEARCH: term" + std::to_string(pick(50))); break;
      case 1: script.push_back("ENTITY SEARCH: none here"); break;
      case 2: script.push_back("PROPERTIES SEARCH: " + q()); break;
      case 3: script.push_back("ENTITY PROPERTY SEARCH: " + q() + " " + p()); break;
      case 4: script.push_back("The answer is " + q() + " " + p()); break;
      case 5: script.push_back("PROPERTIES SEARCH: " + q() + " " + p()); break;
      case 6: script.push_back("BUILD QUERY"); break;
      case 7: script.push_back("STOP."); break;
      default: script.push_back("ENTITY SEARCH: Mount Everest"); break;
    }
  }
  return script;
}

std::string ProtocolLlm::FencedQuery() {
  return std::string("```sparql\n") + kHarnessQuery + "\n```\nLists humans.";
}

std::string ProtocolLlm::Complete(const llm::CompletionRequest& request) {
  llm::CheckRequest(request);
  ++calls;
  const ChatMessage& last = request.messages.back();
  // The results summary is the only single-message request.
  if (request.messages.size() == 1) {
    if (unavailable_when_empty) throw Error(ErrorCode::kLlmUnavailable, "down");
    return fallback;
  }
  bool generating = Contains(last.content, "Your reply did not contain a query") ||
                    (last.role == Role::kSystem && Contains(last.content, "SPARQL") &&
                     Contains(last.content, "SELECT"));
  if (generating) {
    ++generation_calls;
    if (query_replies.empty()) return FencedQuery();
    std::string reply = query_replies.front();
    query_replies.erase(query_replies.begin());
    return reply;
  }
  if (script.empty()) {
    if (unavailable_when_empty) throw Error(ErrorCode::kLlmUnavailable, "down");
    return fallback;
  }
  std::string reply = script.front();
  script.erase(script.begin());
  return reply;
}

}  // namespace linkq::testing
