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

#include <algorithm>
#include <cctype>

#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/results/pipeline.h"
#include "linkq/text.h"

namespace linkq::protocol {
namespace {

constexpr std::string_view kFence = "```";

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Fence {
  std::size_t open = 0;        // position of the opening backticks
  std::size_t body = 0;        // first byte of the block content
  std::size_t close = 0;       // position of the closing backticks
  bool is_query = false;
};

// Next complete fenced block at or after `from`.
std::optional<Fence> NextFence(std::string_view text, std::size_t from) {
  std::size_t open = text.find(kFence, from);
  if (open == std::string_view::npos) return std::nullopt;
  std::size_t line_end = text.find('\n', open);
  if (line_end == std::string_view::npos) return std::nullopt;
  std::string info = Lower(Trim(text.substr(open + 3, line_end - open - 3)));
  std::size_t close = text.find(kFence, line_end + 1);
  if (close == std::string_view::npos) return std::nullopt;
  return Fence{open, line_end + 1, close, info.empty() || info == "sparql"};
}

std::string Bullet(const std::string& id, const std::string& label,
                   const std::string& description) {
  std::string line = "- " + id + ": " + (label.empty() ? "(no label)" : label);
  if (!description.empty()) line += " (" + description + ")";
  return line;
}

}  // namespace

std::optional<QueryBlock> ExtractQueryBlock(std::string_view reply) {
  std::optional<QueryBlock> first;
  std::size_t from = 0;
  while (auto fence = NextFence(reply, from)) {
    from = fence->close + kFence.size();
    if (!fence->is_query) continue;
    if (!first) {
      std::string_view body =
          reply.substr(fence->body, fence->close - fence->body);
      if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
      if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
      first = QueryBlock{std::string(body),
                         std::string(Trim(reply.substr(from))), 0};
    }
    ++first->total_blocks;
  }
  return first;
}

std::string FormatEntitySearch(std::string_view term,
                               const std::vector<kg::EntityMatch>& matches) {
  if (matches.empty()) {
    return "ENTITY SEARCH for \"" + std::string(term) +
           "\" found no entities. Try another name.";
  }
  std::string out = "ENTITY SEARCH results for \"" + std::string(term) + "\":";
  for (const auto& m : matches) {
    out += "\n" + Bullet(m.id.str(), m.label, m.description);
  }
  return out;
}

std::string FormatProperties(const EntityId& entity,
                             const kg::PropertyList& properties) {
  if (properties.properties.empty()) {
    return entity.str() + " has no properties in Wikidata.";
  }
  std::string out = "Properties of " + entity.str() + ":";
  for (const auto& p : properties.properties) {
    out += "\n" + Bullet(p.id.str(), p.label, p.description);
    if (p.sample_value) out += " example value: " + *p.sample_value;
  }
  if (properties.truncated) {
    out += "\n(Only the first " + std::to_string(properties.properties.size()) +
           " properties are listed.)";
  }
  return out;
}

std::string FormatTraversal(const EntityId& entity, const PropertyId& property,
                            const std::vector<kg::EntityMatch>& tails) {
  if (tails.empty()) {
    return "No entities are connected to " + entity.str() + " via " +
           property.str() + ".";
  }
  std::string out = "Entities connected to " + entity.str() + " via " +
                    property.str() + ":";
  for (const auto& t : tails) {
    out += "\n" + Bullet(t.id.str(), t.label, t.description);
  }
  return out;
}

std::string CorrectionMessage(std::string_view problem) {
  return std::string(problem) +
         " Respond with exactly one of these forms and nothing else:\n"
         "ENTITY SEARCH: <entity name>\n"
         "PROPERTIES SEARCH: <entity ID>\n"
         "ENTITY PROPERTY SEARCH: <entity ID> <property ID>\n"
         "STOP";
}

ProtocolEngine::ProtocolEngine(const prompts::PromptLibrary& prompts,
                               llm::LlmClient& llm, Clock& clock,
                               EngineConfig config)
    : prompts_(prompts), llm_(llm), clock_(clock), config_(std::move(config)) {}

SessionState ProtocolEngine::NewSession(std::string id,
                                        std::unique_ptr<kg::KgClient> kg) const {
  SessionState session;
  session.id = std::move(id);
  session.kg = std::move(kg);
  session.created_at = session.last_active = clock_.Now();
  session.transcript.push_back(ChatMessage{
      Role::kSystem,
      prompts_.Render(prompts::TemplateId::kInitialSystem,
                      {{"date", FormatDate(clock_.Now())}}),
      clock_.Now(), Visibility::kInternalProtocol, Provenance::kSystem});
  return session;
}

void ProtocolEngine::Append(SessionState& session, Role role,
                           std::string content, Visibility visibility,
                           std::optional<Provenance> provenance) {
  session.transcript.push_back(
      ChatMessage{role, std::move(content), clock_.Now(), visibility,
                  provenance.value_or(DefaultProvenance(role))});
}

std::string ProtocolEngine::Ask(SessionState& session) {
  llm::CompletionRequest request;
  request.messages = session.transcript;
  request.model = config_.model;
  request.temperature = config_.temperature;
  request.max_tokens = config_.max_tokens;
  return llm_.Complete(request);
}

void ProtocolEngine::AbortToChatting(SessionState& session,
                                     const std::string& why) {
  Append(session, Role::kSystem, why, Visibility::kShown);
  session.machine.Fire(ProtocolEvent::kAbort);
}

ChatTurn ProtocolEngine::StepChat(SessionState& session,
                                  std::string_view user_text) {
  if (Trim(user_text).empty()) {
    throw Error(ErrorCode::kEmptyInput, "message is empty");
  }
  if (session.state() == ProtocolState::kAwaitingUserRunDecision) {
    session.machine.Fire(ProtocolEvent::kUserContinues);
  }
  if (session.state() != ProtocolState::kChatting) {
    throw Error(ErrorCode::kInvalidState,
                "cannot chat while " + std::string(StateName(session.state())));
  }
  session.last_active = clock_.Now();
  std::size_t start = session.transcript.size();
  Append(session, Role::kUser, std::string(user_text), Visibility::kShown);

  std::string reply;
  try {
    reply = Ask(session);
  } catch (const Error&) {
    session.transcript.resize(start);
    throw;
  }

  ChatTurn turn;
  bool build = Contains(reply, "BUILD QUERY");
  // A bare "BUILD QUERY" is protocol traffic; anything longer is also
  // meant for the user.
  bool bare = build && Trim(reply) == "BUILD QUERY";
  Append(session, Role::kAssistant, reply,
         bare ? Visibility::kInternalProtocol : Visibility::kShown);
  if (!build) {
    try {
      if (ParseDirective(reply)) {
        spdlog::info("session {}: directive ignored while chatting",
                     session.id);
      }
    } catch (const Error&) {
    }
    turn.new_messages.assign(session.transcript.begin() + start,
                             session.transcript.end());
    return turn;
  }

  session.machine.Fire(ProtocolEvent::kBuildQuery);
  Append(session, Role::kSystem,
         prompts_.Render(prompts::TemplateId::kIdIdentification, {}),
         Visibility::kInternalProtocol);
  try {
    turn.resolution = RunIdResolution(session);
    turn.generated = GenerateQuery(session);
  } catch (...) {
    turn.new_messages.assign(session.transcript.begin() + start,
                             session.transcript.end());
    throw;
  }
  turn.new_messages.assign(session.transcript.begin() + start,
                           session.transcript.end());
  return turn;
}

std::string ProtocolEngine::Dispatch(SessionState& session,
                                     const Directive& directive) {
  kg::KgClient& kg = *session.kg;
  ResolvedContext& context = session.context;
  if (const auto* d = std::get_if<EntitySearch>(&directive)) {
    auto matches = kg.FuzzySearchEntities(d->term, config_.search_limit);
    for (const auto& m : matches) context.entities.emplace(m.id.str(), m);
    return FormatEntitySearch(d->term, matches);
  }
  if (const auto* d = std::get_if<PropertiesSearch>(&directive)) {
    try {
      kg::PropertyList list = kg.FetchEntityProperties(d->entity);
      for (const auto& p : list.properties) {
        context.properties.emplace(p.id.str(), p);
      }
      return FormatProperties(d->entity, list);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnknownEntity) throw;
      return d->entity.str() +
             " does not exist in Wikidata. Search for the entity first.";
    }
  }
  if (const auto* d = std::get_if<EntityPropertySearch>(&directive)) {
    auto tails = kg.Traverse(d->entity, d->property);
    for (const auto& t : tails) {
      context.entities.emplace(t.id.str(), t);
      context.traversals.push_back(TraversalRecord{d->entity, d->property, t.id});
    }
    return FormatTraversal(d->entity, d->property, tails);
  }
  throw Error(ErrorCode::kInvalidState, "not a search directive");
}

ResolutionOutcome ProtocolEngine::RunIdResolution(SessionState& session) {
  if (session.state() != ProtocolState::kResolvingIds) {
    throw Error(ErrorCode::kInvalidState, "resolution needs ResolvingIds");
  }
  ResolutionOutcome outcome;
  bool done = false;
  while (!done && outcome.llm_calls < config_.max_resolution_iterations) {
    std::string reply;
    try {
      reply = Ask(session);
    } catch (const Error& e) {
      AbortToChatting(session, std::string("The language model is unavailable: ") +
                                   e.what());
      throw;
    }
    ++outcome.llm_calls;
    Append(session, Role::kAssistant, reply, Visibility::kInternalProtocol);

    std::optional<Directive> directive;
    std::string problem;
    try {
      directive = ParseDirective(reply);
      if (!directive) {
        problem = "Your last message was not a command.";
      } else if (std::holds_alternative<BuildQuery>(*directive)) {
        problem = "BUILD QUERY is not a search command.";
      }
    } catch (const Error& e) {
      problem = std::string("Your last command was malformed: ") + e.what() + ".";
    }
    if (!problem.empty()) {
      if (outcome.corrections >= config_.max_corrections) {
        spdlog::warn("session {}: no usable directive after {} corrections, "
                     "treating as STOP", session.id, outcome.corrections);
        done = true;
        break;
      }
      ++outcome.corrections;
      Append(session, Role::kSystem, CorrectionMessage(problem),
             Visibility::kInternalProtocol);
      continue;
    }
    if (std::holds_alternative<Stop>(*directive)) {
      outcome.stopped = true;
      done = true;
      break;
    }

    std::string response;
    try {
      response = Dispatch(session, *directive);
    } catch (const Error& e) {
      AbortToChatting(session, std::string("The knowledge graph is unavailable: ") +
                                   e.what());
      throw;
    }
    session.context.search_log.push_back(SearchLogEntry{*directive, response});
    Append(session, Role::kSystem, response, Visibility::kInternalProtocol,
           Provenance::kKg);
    session.machine.Fire(ProtocolEvent::kSearchDirective);
  }
  outcome.stalled = !done;
  outcome.no_ids_resolved = !session.context.has_ids();
  if (outcome.stalled) {
    spdlog::warn("session {}: resolution stopped at the {}-call cap",
                 session.id, config_.max_resolution_iterations);
  }
  session.last_resolution = outcome;
  session.machine.Fire(ProtocolEvent::kResolutionDone);
  return outcome;
}

GeneratedQuery ProtocolEngine::GenerateQuery(SessionState& session) {
  if (session.state() != ProtocolState::kGeneratingQuery) {
    throw Error(ErrorCode::kInvalidState, "generation needs GeneratingQuery");
  }
  Append(session, Role::kSystem,
         prompts_.Render(prompts::TemplateId::kQueryGeneration,
                         {{"text", session.LastUserText()}}),
         Visibility::kInternalProtocol);
  std::optional<QueryBlock> block;
  for (int attempt = 0; attempt < 2 && !block; ++attempt) {
    if (attempt > 0) {
      Append(session, Role::kSystem,
             "Your reply did not contain a query. Reply with the SPARQL query "
             "inside a ```sparql fenced block, followed by a short explanation.",
             Visibility::kInternalProtocol);
    }
    std::string reply;
    try {
      reply = Ask(session);
    } catch (const Error& e) {
      AbortToChatting(session, std::string("The language model is unavailable: ") +
                                   e.what());
      throw;
    }
    block = ExtractQueryBlock(reply);
    Append(session, Role::kAssistant, reply,
           block ? Visibility::kShown : Visibility::kInternalProtocol);
  }
  if (!block) {
    AbortToChatting(session, "The language model did not produce a query.");
    throw Error(ErrorCode::kNoQueryBlock, "no fenced query block after one retry");
  }
  if (block->total_blocks > 1) {
    spdlog::info("session {}: reply had {} query blocks, using the first",
                 session.id, block->total_blocks);
  }
  GeneratedQuery generated{block->query, block->explanation,
                           block->total_blocks - 1};
  session.generated_query = generated;
  session.history.push_back(QueryHistoryEntry{
      generated.query, QueryOrigin::kLlmGenerated, clock_.Now(), false});
  session.machine.Fire(ProtocolEvent::kQueryGenerated);
  return generated;
}

RunOutcome ProtocolEngine::RunQuery(SessionState& session,
                                    std::string_view query_text) {
  auto checked = sparql::ValidatedQuery::Check(std::string(query_text));
  if (auto* error = std::get_if<sparql::SyntaxError>(&checked)) {
    throw Error(ErrorCode::kInvalidQuery, sparql::FormatSyntaxError(*error));
  }
  const auto& validated = std::get<sparql::ValidatedQuery>(checked);
  session.machine.BeginExecution(validated);
  session.last_active = clock_.Now();

  auto entry = std::find_if(session.history.rbegin(), session.history.rend(),
                            [&](const QueryHistoryEntry& e) {
                              return e.query == validated.text();
                            });
  if (entry != session.history.rend()) {
    entry->executed = true;
  } else {
    session.history.push_back(QueryHistoryEntry{
        validated.text(), QueryOrigin::kUserEdited, clock_.Now(), true});
  }

  RunOutcome outcome;
  try {
    outcome.table = results::CleanResults(
        session.kg->ExecuteSparql(validated, config_.query_timeout));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kQueryRejected && e.code() != ErrorCode::kTimeout) {
      AbortToChatting(session, std::string("The query could not be run: ") +
                                   e.what());
      throw;
    }
    outcome.endpoint_error = e.what();
    outcome.endpoint_error_code = e.code();
  }
  session.machine.Fire(ProtocolEvent::kResultsReady);
  session.latest_table = outcome.table;

  std::string question = session.LastUserText();
  if (question.empty()) question = "(The user ran this query directly.)";
  try {
    outcome.summary = results::Summarize(
        prompts_, llm_,
        {question, validated.text(), &outcome.table, outcome.endpoint_error},
        config_.model);
    Append(session, Role::kAssistant, outcome.summary, Visibility::kShown);
  } catch (const Error& e) {
    outcome.summary_error = e.what();
    spdlog::warn("session {}: no summary: {}", session.id, e.what());
  }
  session.machine.Fire(ProtocolEvent::kSummaryDone);
  return outcome;
}

}  // namespace linkq::protocol
