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

#ifndef LINKQ_SERVICE_SESSION_SERVICE_H_
#define LINKQ_SERVICE_SESSION_SERVICE_H_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linkq/clock.h"
#include "linkq/kg/kg_client.h"
#include "linkq/protocol/engine.h"
#include "linkq/service/preview.h"

namespace linkq::service {

struct ServiceConfig {
  std::chrono::hours idle_ttl{24};
  // When non-empty, each session's transcript and history events are
  // appended to <dir>/<session id>.jsonl.
  std::string persistence_dir;
};

struct ChatDelta {
  std::vector<ChatMessage> messages;
  std::optional<protocol::GeneratedQuery> generated;
  std::optional<protocol::ResolutionOutcome> resolution;
  protocol::ProtocolState state = protocol::ProtocolState::kChatting;
};

struct RunResult {
  protocol::RunOutcome outcome;
  std::string csv_path;  // API path of the CSV attachment
};

struct SessionSnapshot {
  std::string id;
  protocol::ProtocolState state = protocol::ProtocolState::kChatting;
  std::optional<protocol::GeneratedQuery> generated;
  std::string editor_query;
  std::optional<protocol::ResolutionOutcome> last_resolution;
};

// Session store plus the operations behind the HTTP API. Calls on different
// sessions run concurrently; calls on one session are serialized.
class SessionService {
 public:
  using KgFactory = std::function<std::unique_ptr<kg::KgClient>()>;

  SessionService(protocol::ProtocolEngine& engine, KgFactory kg_factory,
                 Clock& clock, ServiceConfig config = {});

  std::string CreateSession();
  ChatDelta PostMessage(const std::string& id, const std::string& text);
  QueryPreviewBundle PreviewQuery(const std::string& id, const std::string& query);
  // Throws kInvalidQuery before any network call for text that does not
  // parse.
  RunResult RunQuery(const std::string& id, const std::string& query);
  std::vector<protocol::QueryHistoryEntry> GetHistory(const std::string& id);
  std::vector<ChatMessage> GetTranscript(const std::string& id,
                                         bool include_internal);
  // Throws kNotFound when no query has run in the session.
  std::string LatestCsv(const std::string& id);
  // Editor text is only ever changed by this call.
  void SetEditorQuery(const std::string& id, const std::string& text);
  SessionSnapshot Snapshot(const std::string& id);

  // Drops sessions idle for longer than the TTL. Returns how many.
  std::size_t EvictIdle();
  std::size_t session_count() const;

 private:
  struct Entry {
    std::mutex mu;
    protocol::SessionState state;
    std::size_t persisted_messages = 0;
    std::size_t persisted_history = 0;
  };

  std::shared_ptr<Entry> Find(const std::string& id);
  void Persist(Entry& entry);
  std::string NewId();

  protocol::ProtocolEngine& engine_;
  KgFactory kg_factory_;
  Clock& clock_;
  ServiceConfig config_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_ = 0;
};

}  // namespace linkq::service

#endif  // LINKQ_SERVICE_SESSION_SERVICE_H_
