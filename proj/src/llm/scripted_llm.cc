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

#include <fstream>

#include <nlohmann/json.hpp>

#include "linkq/error.h"
#include "linkq/llm/llm_client.h"
#include "linkq/text.h"

namespace linkq::llm {

void CheckRequest(const CompletionRequest& request) {
  if (request.messages.empty()) {
    throw Error(ErrorCode::kInvalidRequest, "completion request has no messages");
  }
  if (request.messages.front().role != Role::kSystem) {
    throw Error(ErrorCode::kInvalidRequest,
                "completion request must start with a system message");
  }
  if (request.temperature < 0.0 || request.max_tokens <= 0) {
    throw Error(ErrorCode::kInvalidRequest, "bad sampling parameters");
  }
}

ScriptedLlm::ScriptedLlm(std::vector<std::string> replies)
    : queue_(replies.begin(), replies.end()) {}

std::string ScriptedLlm::Complete(const CompletionRequest& request) {
  CheckRequest(request);
  std::lock_guard<std::mutex> lock(mu_);
  if (queue_.empty()) {
    throw Error(ErrorCode::kScriptExhausted,
                "scripted LLM has no reply left for call " +
                    std::to_string(call_log_.size() + 1));
  }
  call_log_.push_back(request);
  std::string reply = std::move(queue_.front());
  queue_.pop_front();
  return reply;
}

void ScriptedLlm::Push(std::string reply) {
  std::lock_guard<std::mutex> lock(mu_);
  queue_.push_back(std::move(reply));
}

std::size_t ScriptedLlm::remaining() const {
  std::lock_guard<std::mutex> lock(mu_);
  return queue_.size();
}

std::vector<CompletionRequest> ScriptedLlm::call_log() const {
  std::lock_guard<std::mutex> lock(mu_);
  return call_log_;
}

std::size_t ScriptedLlm::call_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return call_log_.size();
}

std::vector<std::string> LoadScript(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadFileOrThrow(path));
    return doc.at("replies").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedDocument,
                "bad LLM script " + path + ": " + e.what());
  }
}

void SaveScript(const std::string& path,
                const std::vector<std::string>& replies) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kNotFound, "cannot write " + path);
  out << nlohmann::json{{"replies", replies}}.dump(2) << "\n";
}

RecordingLlm::RecordingLlm(LlmClient& inner, std::string path)
    : inner_(inner), path_(std::move(path)) {}

std::string RecordingLlm::Complete(const CompletionRequest& request) {
  std::string reply = inner_.Complete(request);
  std::lock_guard<std::mutex> lock(mu_);
  replies_.push_back(reply);
  SaveScript(path_, replies_);
  return reply;
}

}  // namespace linkq::llm
