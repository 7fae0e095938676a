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

#ifndef LINKQ_SERVICE_JSON_VIEWS_H_
#define LINKQ_SERVICE_JSON_VIEWS_H_

#include <nlohmann/json.hpp>

#include "linkq/chat.h"
#include "linkq/error.h"
#include "linkq/protocol/session_state.h"
#include "linkq/results/result_table.h"
#include "linkq/service/preview.h"
#include "linkq/service/session_service.h"

// Wire shapes of the HTTP API. Objects holding KG or LLM content carry a
// "provenance" field of "kg" or "llm".
namespace linkq::service {

nlohmann::json ToJson(const ChatMessage& message);
nlohmann::json ToJson(const protocol::QueryHistoryEntry& entry);
nlohmann::json ToJson(const results::ResultTable& table);
nlohmann::json ToJson(const QueryPreviewBundle& bundle);
nlohmann::json ToJson(const ChatDelta& delta);
nlohmann::json ToJson(const RunResult& result);
nlohmann::json ToJson(const SessionSnapshot& snapshot);
nlohmann::json ErrorJson(const Error& error);

// HTTP status for an error category.
int HttpStatusFor(ErrorCode code);

}  // namespace linkq::service

#endif  // LINKQ_SERVICE_JSON_VIEWS_H_
