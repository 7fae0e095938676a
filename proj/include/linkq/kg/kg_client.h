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

#ifndef LINKQ_KG_KG_CLIENT_H_
#define LINKQ_KG_KG_CLIENT_H_

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "linkq/http.h"
#include "linkq/ids.h"
#include "linkq/kg/types.h"
#include "linkq/labels.h"
#include "linkq/sparql/analysis.h"

namespace linkq::kg {

// Knowledge graph operations used by the protocol and the preview. Every
// operation throws Error(kKgUnavailable) when the service cannot be reached.
class KgClient {
 public:
  virtual ~KgClient() = default;

  // Up to `limit` matches in service rank order. Throws kEmptyTerm.
  virtual std::vector<EntityMatch> FuzzySearchEntities(std::string_view term,
                                                       int limit) = 0;
  // Distinct properties asserted on the entity. Throws kUnknownEntity.
  virtual PropertyList FetchEntityProperties(const EntityId& entity) = 0;
  // Entities reachable from `entity` over `property`.
  virtual std::vector<EntityMatch> Traverse(const EntityId& entity,
                                            const PropertyId& property) = 0;
  // One entry per input id, unknown ids flagged missing. Throws kEmptyInput
  // for an empty list and kInvalidId for malformed ids.
  virtual LabelMap FetchLabels(const std::vector<std::string>& ids) = 0;
  // Throws kQueryRejected (endpoint 4xx, message verbatim) or kTimeout.
  virtual SparqlResultDocument ExecuteSparql(const sparql::ValidatedQuery& query,
                                             std::chrono::seconds timeout) = 0;
};

struct KgConfig {
  std::string api_url = "https://www.wikidata.org/w/api.php";
  std::string sparql_url = "https://query.wikidata.org/sparql";
  std::string user_agent =
      "linkq/0.1 (natural-language Wikidata query assistant; cpp-httplib)";
  std::string language = "en";
  std::size_t property_cap = 200;
  std::size_t label_batch_size = 50;
  std::chrono::milliseconds request_timeout{30000};

  // Applies LINKQ_WIKIDATA_API_URL and LINKQ_SPARQL_URL.
  static KgConfig FromEnv();
};

// Wikidata over its action API and query service.
class WikidataClient final : public KgClient {
 public:
  WikidataClient(KgConfig config, HttpTransport& transport);

  std::vector<EntityMatch> FuzzySearchEntities(std::string_view term,
                                               int limit) override;
  PropertyList FetchEntityProperties(const EntityId& entity) override;
  std::vector<EntityMatch> Traverse(const EntityId& entity,
                                    const PropertyId& property) override;
  LabelMap FetchLabels(const std::vector<std::string>& ids) override;
  SparqlResultDocument ExecuteSparql(const sparql::ValidatedQuery& query,
                                     std::chrono::seconds timeout) override;

  const KgConfig& config() const { return config_; }

 private:
  HttpResponse Fetch(HttpRequest request);
  SparqlResultDocument RunSparql(const std::string& operation,
                                 const std::string& query,
                                 std::chrono::milliseconds timeout);
  LabelMap FetchLabelBatch(const std::vector<std::string>& ids);

  KgConfig config_;
  HttpTransport& transport_;
};

// A WikidataClient with its own response cache in front of `shared`. One
// per session: the cache lives and dies with the session.
std::unique_ptr<KgClient> MakeSessionClient(const KgConfig& config,
                                            HttpTransport& shared);

// Query text used to enumerate an entity's properties; LIMIT is cap + 1 so
// truncation is detectable.
std::string PropertiesQuery(const EntityId& entity, std::size_t cap);
std::string TraverseQuery(const EntityId& entity, const PropertyId& property);

// "http://www.wikidata.org/entity/Q5" -> "Q5"; other text unchanged.
std::string ShortenEntityIri(std::string_view value);

}  // namespace linkq::kg

#endif  // LINKQ_KG_KG_CLIENT_H_
