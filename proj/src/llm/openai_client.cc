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

#include <cstdlib>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/llm/llm_client.h"

namespace linkq::llm {
namespace {

bool Retryable(const HttpResponse& response) {
  return response.status == 0 || response.status == 429 ||
         response.status >= 500;
}

std::string Snippet(const std::string& body) {
  constexpr std::size_t kMax = 300;
  return body.size() <= kMax ? body : body.substr(0, kMax) + "...";
}

// Some providers echo the presented key in error bodies.
std::string Redact(std::string text, const std::string& secret) {
  if (secret.empty()) return text;
  for (std::size_t at = text.find(secret); at != std::string::npos;
       at = text.find(secret, at)) {
    text.replace(at, secret.size(), "[redacted]");
  }
  return text;
}

std::string EnvOr(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : fallback;
}

}  // namespace

OpenAiConfig OpenAiConfig::FromEnv() {
  OpenAiConfig config;
  config.url = EnvOr("LINKQ_LLM_URL", config.url);
  config.model = EnvOr("LINKQ_LLM_MODEL", config.model);
  config.api_key = EnvOr("LINKQ_LLM_API_KEY", "");
  return config;
}

std::string EncodeChatRequest(const CompletionRequest& request,
                              const std::string& default_model) {
  nlohmann::json messages = nlohmann::json::array();
  for (const ChatMessage& m : request.messages) {
    messages.push_back({{"role", RoleName(m.role)}, {"content", m.content}});
  }
  return nlohmann::json{
      {"model", request.model.empty() ? default_model : request.model},
      {"messages", std::move(messages)},
      {"temperature", request.temperature},
      {"max_tokens", request.max_tokens},
      {"stream", false},
  }.dump();
}

std::string DecodeChatResponse(const std::string& body) {
  try {
    auto doc = nlohmann::json::parse(body);
    const auto& content = doc.at("choices").at(0).at("message").at("content");
    if (!content.is_string()) {
      throw Error(ErrorCode::kLlmUnavailable, "completion has no text content");
    }
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kLlmUnavailable,
                std::string("unreadable completion response: ") + e.what());
  }
}

OpenAiClient::OpenAiClient(OpenAiConfig config, HttpTransport& transport,
                           Clock& clock)
    : config_(std::move(config)), transport_(transport), clock_(clock) {}

std::string OpenAiClient::Complete(const CompletionRequest& request) {
  CheckRequest(request);
  if (config_.api_key.empty()) {
    throw Error(ErrorCode::kLlmUnavailable, "LINKQ_LLM_API_KEY is not set");
  }
  HttpRequest http;
  http.operation = "chat_completion";
  http.method = "POST";
  http.url = config_.url;
  http.headers["Content-Type"] = "application/json";
  http.headers["Authorization"] = "Bearer " + config_.api_key;
  http.body = EncodeChatRequest(request, config_.model);
  http.timeout = config_.timeout;

  auto backoff = config_.initial_backoff;
  std::string last_failure;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    // The request is logged by url and size only; headers carry the key.
    spdlog::debug("llm: POST {} attempt {}/{} ({} messages, {} bytes)",
                  config_.url, attempt, config_.max_attempts,
                  request.messages.size(), http.body.size());
    HttpResponse response = transport_.Send(http);
    if (response.status >= 200 && response.status < 300) {
      return DecodeChatResponse(response.body);
    }
    last_failure = response.status == 0
                       ? "transport error: " +
                             Redact(response.transport_error, config_.api_key)
                       : "HTTP " + std::to_string(response.status) + ": " +
                             Snippet(Redact(response.body, config_.api_key));
    spdlog::warn("llm: attempt {} failed ({})", attempt, last_failure);
    if (!Retryable(response)) break;
    if (attempt < config_.max_attempts) {
      clock_.SleepFor(backoff);
      backoff *= 2;
    }
  }
  throw Error(ErrorCode::kLlmUnavailable, "LLM request failed: " + last_failure);
}

}  // namespace linkq::llm
