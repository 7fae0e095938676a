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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/results/pipeline.h"
#include "linkq/service/json_views.h"

namespace linkq::service {

SessionService::SessionService(protocol::ProtocolEngine& engine,
                               KgFactory kg_factory, Clock& clock,
                               ServiceConfig config)
    : engine_(engine),
      kg_factory_(std::move(kg_factory)),
      clock_(clock),
      config_(std::move(config)) {
  std::random_device device;
  id_salt_ = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  if (!config_.persistence_dir.empty()) {
    std::filesystem::create_directories(config_.persistence_dir);
  }
}

std::string SessionService::NewId() {
  // splitmix64 over a salted counter: unique within the process and not
  // guessable from the previous id.
  std::uint64_t z = id_salt_ + 0x9e3779b97f4a7c15ull * ++id_counter_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z ^= z >> 31;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(z));
  return buf;
}

std::string SessionService::CreateSession() {
  EvictIdle();
  auto entry = std::make_shared<Entry>();
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    do {
      id = NewId();
    } while (sessions_.count(id));
    sessions_[id] = entry;
  }
  std::lock_guard<std::mutex> lock(entry->mu);
  entry->state = engine_.NewSession(id, kg_factory_());
  Persist(*entry);
  return id;
}

std::shared_ptr<SessionService::Entry> SessionService::Find(
    const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kNotFound, "no session " + id);
  }
  return it->second;
}

void SessionService::Persist(Entry& entry) {
  if (config_.persistence_dir.empty()) return;
  const protocol::SessionState& s = entry.state;
  std::ofstream out(config_.persistence_dir + "/" + s.id + ".jsonl",
                    std::ios::app | std::ios::binary);
  if (!out) {
    spdlog::warn("session {}: cannot append to persistence log", s.id);
    return;
  }
  for (; entry.persisted_messages < s.transcript.size(); ++entry.persisted_messages) {
    out << nlohmann::json{{"type", "message"},
                          {"message", ToJson(s.transcript[entry.persisted_messages])}}
               .dump()
        << "\n";
  }
  for (; entry.persisted_history < s.history.size(); ++entry.persisted_history) {
    out << nlohmann::json{{"type", "history"},
                          {"entry", ToJson(s.history[entry.persisted_history])}}
               .dump()
        << "\n";
  }
}

ChatDelta SessionService::PostMessage(const std::string& id,
                                      const std::string& text) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  ChatDelta delta;
  try {
    protocol::ChatTurn turn = engine_.StepChat(entry->state, text);
    delta.messages = std::move(turn.new_messages);
    delta.generated = std::move(turn.generated);
    delta.resolution = turn.resolution;
  } catch (...) {
    Persist(*entry);
    throw;
  }
  delta.state = entry->state.state();
  Persist(*entry);
  return delta;
}

QueryPreviewBundle SessionService::PreviewQuery(const std::string& id,
                                                const std::string& query) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  entry->state.last_active = clock_.Now();
  return BuildPreview(query, entry->state.kg.get());
}

RunResult SessionService::RunQuery(const std::string& id,
                                   const std::string& query) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  RunResult result;
  try {
    result.outcome = engine_.RunQuery(entry->state, query);
  } catch (...) {
    Persist(*entry);
    throw;
  }
  result.csv_path = "/sessions/" + id + "/results/latest.csv";
  Persist(*entry);
  if (!config_.persistence_dir.empty()) {
    std::ofstream out(config_.persistence_dir + "/" + id + ".jsonl",
                      std::ios::app | std::ios::binary);
    out << nlohmann::json{{"type", "run"},
                          {"query", query},
                          {"at", FormatTimestamp(clock_.Now())}}
               .dump()
        << "\n";
  }
  return result;
}

std::vector<protocol::QueryHistoryEntry> SessionService::GetHistory(
    const std::string& id) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  return entry->state.history;
}

std::vector<ChatMessage> SessionService::GetTranscript(const std::string& id,
                                                       bool include_internal) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  return entry->state.Transcript(include_internal);
}

std::string SessionService::LatestCsv(const std::string& id) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  if (!entry->state.latest_table) {
    throw Error(ErrorCode::kNotFound, "no query has been run in session " + id);
  }
  return results::ToCsv(*entry->state.latest_table);
}

void SessionService::SetEditorQuery(const std::string& id,
                                    const std::string& text) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  entry->state.editor_query = text;
  entry->state.last_active = clock_.Now();
}

SessionSnapshot SessionService::Snapshot(const std::string& id) {
  auto entry = Find(id);
  std::lock_guard<std::mutex> lock(entry->mu);
  const protocol::SessionState& s = entry->state;
  return SessionSnapshot{s.id, s.state(), s.generated_query, s.editor_query,
                         s.last_resolution};
}

std::size_t SessionService::EvictIdle() {
  auto now = clock_.Now();
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t evicted = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    Entry& entry = *it->second;
    // A session that is busy is by definition not idle.
    std::unique_lock<std::mutex> session_lock(entry.mu, std::try_to_lock);
    if (session_lock.owns_lock() && !entry.state.id.empty() &&
        now - entry.state.last_active > config_.idle_ttl) {
      session_lock.unlock();
      it = sessions_.erase(it);
      ++evicted;
    } else {
      ++it;
    }
  }
  return evicted;
}

std::size_t SessionService::session_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

}  // namespace linkq::service
