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

#ifndef LINKQ_TESTS_SUPPORT_FAKE_KG_H_
#define LINKQ_TESTS_SUPPORT_FAKE_KG_H_

#include <optional>
#include <set>
#include <string>

#include "linkq/error.h"
#include "linkq/kg/kg_client.h"

namespace linkq::testing {

// Deterministic in-memory knowledge graph that remembers every identifier
// it hands out, so tests can check what the engine was actually told.
//
//   search "none..."          -> no matches
//   search anything else      -> two entities derived from the term
//   properties of Q >= 900000 -> UnknownEntity
//   traverse via P2044        -> no tails
//   labels of Q404            -> missing
class FakeKg final : public kg::KgClient {
 public:
  std::vector<kg::EntityMatch> FuzzySearchEntities(std::string_view term,
                                                   int limit) override;
  kg::PropertyList FetchEntityProperties(const EntityId& entity) override;
  std::vector<kg::EntityMatch> Traverse(const EntityId& entity,
                                        const PropertyId& property) override;
  LabelMap FetchLabels(const std::vector<std::string>& ids) override;
  kg::SparqlResultDocument ExecuteSparql(const sparql::ValidatedQuery& query,
                                         std::chrono::seconds timeout) override;

  // Everything returned so far.
  std::set<std::string> returned_entities;
  std::set<std::string> returned_properties;
  std::set<std::string> returned_tails;  // "Qh|Pp|Qt"
  int calls = 0;
  int sparql_calls = 0;

  // When set, the next call of any kind throws this code.
  std::optional<ErrorCode> fail_with;
  kg::SparqlResultDocument next_result;
  std::optional<Error> next_sparql_error;

 private:
  void Tick();
};

}  // namespace linkq::testing

#endif  // LINKQ_TESTS_SUPPORT_FAKE_KG_H_
