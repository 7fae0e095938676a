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

#ifndef LINKQ_LLM_LLM_CLIENT_H_
#define LINKQ_LLM_LLM_CLIENT_H_

#include <chrono>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "linkq/chat.h"
#include "linkq/clock.h"
#include "linkq/http.h"

namespace linkq::llm {

struct CompletionRequest {
  std::vector<ChatMessage> messages;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 2048;
};

// Throws Error(kInvalidRequest) unless messages is non-empty, starts with a
// system message, temperature >= 0 and max_tokens > 0.
void CheckRequest(const CompletionRequest& request);

class LlmClient {
 public:
  virtual ~LlmClient() = default;
  // Returns the assistant text. Throws Error(kLlmUnavailable) on failure.
  virtual std::string Complete(const CompletionRequest& request) = 0;
};

// Deterministic test double: each call pops the next canned reply.
class ScriptedLlm final : public LlmClient {
 public:
  ScriptedLlm() = default;
  explicit ScriptedLlm(std::vector<std::string> replies);

  // Throws Error(kScriptExhausted) when no replies remain.
  std::string Complete(const CompletionRequest& request) override;

  void Push(std::string reply);
  std::size_t remaining() const;
  std::vector<CompletionRequest> call_log() const;
  std::size_t call_count() const;

 private:
  mutable std::mutex mu_;
  std::deque<std::string> queue_;
  std::vector<CompletionRequest> call_log_;
};

// Reads {"replies": [...]} as written by RecordingLlm.
std::vector<std::string> LoadScript(const std::string& path);
void SaveScript(const std::string& path, const std::vector<std::string>& replies);

// Forwards to another client and rewrites `path` with every reply so far.
// A later run can replay the file through ScriptedLlm.
class RecordingLlm final : public LlmClient {
 public:
  RecordingLlm(LlmClient& inner, std::string path);
  std::string Complete(const CompletionRequest& request) override;

 private:
  LlmClient& inner_;
  std::string path_;
  std::mutex mu_;
  std::vector<std::string> replies_;
};

struct OpenAiConfig {
  std::string url = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-4o";
  std::string api_key;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds timeout{60000};

  // Reads LINKQ_LLM_URL, LINKQ_LLM_MODEL and LINKQ_LLM_API_KEY.
  static OpenAiConfig FromEnv();
};

// Client for an OpenAI-compatible chat-completions endpoint. Retries 429,
// 5xx and transport failures with exponential backoff. Stateless apart from
// its configuration, so one instance can serve many sessions.
class OpenAiClient final : public LlmClient {
 public:
  OpenAiClient(OpenAiConfig config, HttpTransport& transport, Clock& clock);
  std::string Complete(const CompletionRequest& request) override;

  const std::string& default_model() const { return config_.model; }

 private:
  OpenAiConfig config_;
  HttpTransport& transport_;
  Clock& clock_;
};

// Wire body for one request, exposed for tests.
std::string EncodeChatRequest(const CompletionRequest& request,
                              const std::string& default_model);
// Extracts choices[0].message.content. Throws Error(kLlmUnavailable).
std::string DecodeChatResponse(const std::string& body);

}  // namespace linkq::llm

#endif  // LINKQ_LLM_LLM_CLIENT_H_
