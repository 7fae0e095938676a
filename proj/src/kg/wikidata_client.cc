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

#include <algorithm>
#include <cstdlib>
#include <set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/kg/kg_client.h"
#include "linkq/kg/transports.h"
#include "linkq/sparql/ast.h"
#include "linkq/text.h"

namespace linkq::kg {
namespace {

constexpr std::string_view kEntityPrefix = "http://www.wikidata.org/entity/";

nlohmann::json ParseJsonOrThrow(const std::string& body,
                                const std::string& operation) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kKgUnavailable,
                operation + ": service returned non-JSON content");
  }
  return doc;
}

std::string StringField(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get<std::string>() : "";
}

// wbgetentities nests text as {"en": {"language": "en", "value": ...}}.
std::string LanguageValue(const nlohmann::json& entity, const char* field,
                          const std::string& language) {
  auto group = entity.find(field);
  if (group == entity.end() || !group->is_object()) return "";
  auto entry = group->find(language);
  if (entry == group->end() || !entry->is_object()) return "";
  return StringField(*entry, "value");
}

std::string TermValue(const std::map<std::string, RdfTerm>& row,
                      const std::string& name) {
  auto it = row.find(name);
  return it == row.end() ? "" : it->second.value;
}

std::string EnvOr(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : fallback;
}

}  // namespace

KgConfig KgConfig::FromEnv() {
  KgConfig config;
  config.api_url = EnvOr("LINKQ_WIKIDATA_API_URL", config.api_url);
  config.sparql_url = EnvOr("LINKQ_SPARQL_URL", config.sparql_url);
  return config;
}

std::string ShortenEntityIri(std::string_view value) {
  if (value.substr(0, kEntityPrefix.size()) == kEntityPrefix) {
    std::string_view id = value.substr(kEntityPrefix.size());
    if (IsEntityIdText(id) || IsPropertyIdText(id)) return std::string(id);
  }
  return std::string(value);
}

std::string PropertiesQuery(const EntityId& entity, std::size_t cap) {
  return "SELECT ?property ?propertyLabel ?propertyDescription ?sample WHERE {\n"
         "  {\n"
         "    SELECT ?property (SAMPLE(?value) AS ?sample) WHERE {\n"
         "      wd:" + entity.str() + " ?claim ?value .\n"
         "      ?property wikibase:directClaim ?claim .\n"
         "    }\n"
         "    GROUP BY ?property\n"
         "    ORDER BY ?property\n"
         "    LIMIT " + std::to_string(cap + 1) + "\n"
         "  }\n"
         "  SERVICE wikibase:label { bd:serviceParam wikibase:language \"en\". }\n"
         "}";
}

std::string TraverseQuery(const EntityId& entity, const PropertyId& property) {
  return "SELECT ?tail ?tailLabel ?tailDescription WHERE {\n"
         "  wd:" + entity.str() + " wdt:" + property.str() + " ?tail .\n"
         "  FILTER(STRSTARTS(STR(?tail), \"http://www.wikidata.org/entity/Q\"))\n"
         "  SERVICE wikibase:label { bd:serviceParam wikibase:language \"en\". }\n"
         "}";
}

WikidataClient::WikidataClient(KgConfig config, HttpTransport& transport)
    : config_(std::move(config)), transport_(transport) {}

HttpResponse WikidataClient::Fetch(HttpRequest request) {
  request.headers["User-Agent"] = config_.user_agent;
  HttpResponse response = transport_.Send(request);
  if (response.status == 0) {
    if (response.timed_out) {
      throw Error(ErrorCode::kTimeout,
                  request.operation + " timed out: " + response.transport_error);
    }
    throw Error(ErrorCode::kKgUnavailable,
                request.operation + " failed: " + response.transport_error);
  }
  return response;
}

std::vector<EntityMatch> WikidataClient::FuzzySearchEntities(
    std::string_view term, int limit) {
  std::string trimmed(Trim(term));
  if (trimmed.empty()) throw Error(ErrorCode::kEmptyTerm, "empty search term");
  if (limit <= 0) throw Error(ErrorCode::kInvalidRequest, "limit must be positive");
  HttpRequest request;
  request.operation = "search_entities";
  request.url = config_.api_url;
  request.query = {{"action", "wbsearchentities"}, {"format", "json"},
                   {"language", config_.language}, {"uselang", config_.language},
                   {"type", "item"}, {"search", trimmed},
                   {"limit", std::to_string(limit)}};
  request.timeout = config_.request_timeout;
  HttpResponse response = Fetch(request);
  if (response.status != 200) {
    throw Error(ErrorCode::kKgUnavailable,
                "entity search returned HTTP " + std::to_string(response.status));
  }
  nlohmann::json doc = ParseJsonOrThrow(response.body, request.operation);
  std::vector<EntityMatch> out;
  auto search = doc.find("search");
  if (search == doc.end() || !search->is_array()) {
    throw Error(ErrorCode::kKgUnavailable, "entity search: no search array");
  }
  for (const auto& hit : *search) {
    auto id = EntityId::TryParse(StringField(hit, "id"));
    if (!id) continue;
    std::string label = StringField(hit, "label");
    if (label.empty() && hit.contains("display")) {
      label = StringField(hit["display"].value("label", nlohmann::json::object()),
                          "value");
    }
    out.push_back(EntityMatch{*id, label, StringField(hit, "description"),
                              static_cast<int>(out.size())});
    if (out.size() == static_cast<std::size_t>(limit)) break;
  }
  return out;
}

SparqlResultDocument WikidataClient::RunSparql(const std::string& operation,
                                               const std::string& query,
                                               std::chrono::milliseconds timeout) {
  HttpRequest request;
  request.operation = operation;
  request.url = config_.sparql_url;
  request.query = {{"query", query}};
  request.headers["Accept"] = "application/sparql-results+json";
  request.timeout = timeout;
  HttpResponse response = Fetch(request);
  if (response.status >= 400 && response.status < 500) {
    throw Error(ErrorCode::kQueryRejected, response.body);
  }
  if (response.status != 200) {
    // The query service reports its own time limit as a 500.
    if (Contains(response.body, "TimeoutException")) {
      throw Error(ErrorCode::kTimeout, "query service time limit exceeded");
    }
    throw Error(ErrorCode::kKgUnavailable,
                operation + " returned HTTP " + std::to_string(response.status));
  }
  return ParseSparqlResults(response.body);
}

PropertyList WikidataClient::FetchEntityProperties(const EntityId& entity) {
  SparqlResultDocument doc =
      RunSparql("entity_properties", PropertiesQuery(entity, config_.property_cap),
                config_.request_timeout);
  PropertyList out;
  for (const auto& row : doc.bindings) {
    auto id = PropertyId::TryParse(ShortenEntityIri(TermValue(row, "property")));
    if (!id) continue;
    if (out.properties.size() == config_.property_cap) {
      out.truncated = true;
      break;
    }
    PropertyRecord record{*id, TermValue(row, "propertyLabel"),
                          TermValue(row, "propertyDescription"), std::nullopt};
    auto sample = row.find("sample");
    if (sample != row.end()) record.sample_value = ShortenEntityIri(sample->second.value);
    out.properties.push_back(std::move(record));
  }
  if (out.properties.empty()) {
    LabelMap labels = FetchLabels({entity.str()});
    if (labels.at(entity.str()).missing) {
      throw Error(ErrorCode::kUnknownEntity,
                  entity.str() + " does not exist in Wikidata");
    }
  }
  return out;
}

std::vector<EntityMatch> WikidataClient::Traverse(const EntityId& entity,
                                                  const PropertyId& property) {
  SparqlResultDocument doc = RunSparql(
      "traverse", TraverseQuery(entity, property), config_.request_timeout);
  std::vector<EntityMatch> out;
  std::set<std::string> seen;
  for (const auto& row : doc.bindings) {
    auto id = EntityId::TryParse(ShortenEntityIri(TermValue(row, "tail")));
    if (!id || !seen.insert(id->str()).second) continue;
    out.push_back(EntityMatch{*id, TermValue(row, "tailLabel"),
                              TermValue(row, "tailDescription"),
                              static_cast<int>(out.size())});
  }
  return out;
}

LabelMap WikidataClient::FetchLabelBatch(const std::vector<std::string>& ids) {
  std::string joined;
  for (const std::string& id : ids) {
    if (!joined.empty()) joined += "|";
    joined += id;
  }
  HttpRequest request;
  request.operation = "fetch_labels";
  request.url = config_.api_url;
  request.query = {{"action", "wbgetentities"}, {"format", "json"},
                   {"ids", joined}, {"props", "labels|descriptions"},
                   {"languages", config_.language}};
  request.timeout = config_.request_timeout;
  HttpResponse response = Fetch(request);
  if (response.status != 200) {
    throw Error(ErrorCode::kKgUnavailable,
                "label lookup returned HTTP " + std::to_string(response.status));
  }
  nlohmann::json doc = ParseJsonOrThrow(response.body, request.operation);
  LabelMap out;
  const nlohmann::json* entities = nullptr;
  if (auto it = doc.find("entities"); it != doc.end() && it->is_object()) {
    entities = &*it;
  }
  for (const std::string& id : ids) {
    EntityLabel label;
    label.missing = true;
    if (entities && entities->contains(id)) {
      const nlohmann::json& entity = (*entities)[id];
      if (!entity.contains("missing")) {
        label.missing = false;
        label.label = LanguageValue(entity, "labels", config_.language);
        label.description = LanguageValue(entity, "descriptions", config_.language);
      }
    }
    out.emplace(id, std::move(label));
  }
  return out;
}

LabelMap WikidataClient::FetchLabels(const std::vector<std::string>& ids) {
  if (ids.empty()) throw Error(ErrorCode::kEmptyInput, "no ids to look up");
  std::vector<std::string> unique;
  std::set<std::string> seen;
  for (const std::string& id : ids) {
    ParseKgId(id);
    if (seen.insert(id).second) unique.push_back(id);
  }
  LabelMap out;
  for (std::size_t start = 0; start < unique.size();
       start += config_.label_batch_size) {
    std::size_t end = std::min(unique.size(), start + config_.label_batch_size);
    LabelMap batch = FetchLabelBatch(
        std::vector<std::string>(unique.begin() + start, unique.begin() + end));
    out.merge(batch);
  }
  return out;
}

SparqlResultDocument WikidataClient::ExecuteSparql(
    const sparql::ValidatedQuery& query, std::chrono::seconds timeout) {
  if (timeout.count() <= 0) {
    throw Error(ErrorCode::kInvalidRequest, "timeout must be positive");
  }
  return RunSparql("execute_sparql", query.text(), timeout);
}

namespace {

class SessionClient final : public KgClient {
 public:
  SessionClient(const KgConfig& config, HttpTransport& shared)
      : cache_(shared), client_(config, cache_) {}

  std::vector<EntityMatch> FuzzySearchEntities(std::string_view term,
                                               int limit) override {
    return client_.FuzzySearchEntities(term, limit);
  }
  PropertyList FetchEntityProperties(const EntityId& entity) override {
    return client_.FetchEntityProperties(entity);
  }
  std::vector<EntityMatch> Traverse(const EntityId& entity,
                                    const PropertyId& property) override {
    return client_.Traverse(entity, property);
  }
  LabelMap FetchLabels(const std::vector<std::string>& ids) override {
    return client_.FetchLabels(ids);
  }
  SparqlResultDocument ExecuteSparql(const sparql::ValidatedQuery& query,
                                     std::chrono::seconds timeout) override {
    return client_.ExecuteSparql(query, timeout);
  }

 private:
  CachingTransport cache_;
  WikidataClient client_;
};

}  // namespace

std::unique_ptr<KgClient> MakeSessionClient(const KgConfig& config,
                                            HttpTransport& shared) {
  return std::make_unique<SessionClient>(config, shared);
}

}  // namespace linkq::kg
