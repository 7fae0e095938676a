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

#include "linkq/kg/transports.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/text.h"

namespace linkq::kg {
namespace {

nlohmann::json RequestJson(const HttpRequest& request) {
  nlohmann::json query = nlohmann::json::array();
  for (const auto& [key, value] : request.query) query.push_back({key, value});
  return {{"method", request.method}, {"query", query}, {"body", request.body}};
}

}  // namespace

RateLimitedTransport::RateLimitedTransport(HttpTransport& inner, Clock& clock,
                                           std::chrono::milliseconds min_spacing)
    : inner_(inner), clock_(clock), min_spacing_(min_spacing) {}

HttpResponse RateLimitedTransport::Send(const HttpRequest& request) {
  {
    // Holding the lock while sleeping queues concurrent callers in order.
    std::lock_guard<std::mutex> lock(mu_);
    if (has_last_) {
      auto elapsed = clock_.Now() - last_start_;
      if (elapsed < min_spacing_) clock_.SleepFor(min_spacing_ - elapsed);
    }
    has_last_ = true;
    last_start_ = clock_.Now();
  }
  return inner_.Send(request);
}

HttpResponse CachingTransport::Send(const HttpRequest& request) {
  std::string key = CanonicalRequestKey(request);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    ++misses_;
  }
  HttpResponse response = inner_.Send(request);
  if (response.status >= 200 && response.status < 300) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.emplace(std::move(key), response);
  }
  return response;
}

std::size_t CachingTransport::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::size_t CachingTransport::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

std::string CanonicalRequestKey(const HttpRequest& request) {
  nlohmann::json key = RequestJson(request);
  key["operation"] = request.operation;
  return key.dump();
}

std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string FixtureFileName(const HttpRequest& request) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(CanonicalRequestKey(request))));
  std::string op = request.operation.empty() ? "request" : request.operation;
  return op + "-" + hex + ".json";
}

RecordingTransport::RecordingTransport(HttpTransport& inner,
                                       std::string directory)
    : inner_(inner), directory_(std::move(directory)) {}

HttpResponse RecordingTransport::Send(const HttpRequest& request) {
  HttpResponse response = inner_.Send(request);
  if (response.status == 0) return response;
  nlohmann::json envelope = {
      {"operation", request.operation},
      {"request", RequestJson(request)},
      {"status", response.status},
      {"body", response.body},
  };
  std::lock_guard<std::mutex> lock(mu_);
  std::filesystem::create_directories(directory_);
  std::string path = directory_ + "/" + FixtureFileName(request);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kNotFound, "cannot write fixture " + path);
  out << envelope.dump(2) << "\n";
  spdlog::info("kg: recorded {}", path);
  return response;
}

ReplayTransport::ReplayTransport(std::string directory)
    : directory_(std::move(directory)) {}

HttpResponse ReplayTransport::Send(const HttpRequest& request) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++calls_[request.operation];
  }
  HttpResponse response;
  std::string path = directory_ + "/" + FixtureFileName(request);
  if (!std::filesystem::exists(path)) {
    response.transport_error = "no replay fixture " + path;
    return response;
  }
  nlohmann::json envelope;
  try {
    envelope = nlohmann::json::parse(ReadFileOrThrow(path));
    if (envelope.at("request") != RequestJson(request) ||
        envelope.at("operation") != request.operation) {
      response.transport_error = "fixture " + path + " records another request";
      return response;
    }
    response.status = envelope.at("status").get<int>();
    response.body = envelope.at("body").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    response.transport_error = "unreadable fixture " + path + ": " + e.what();
  }
  return response;
}

std::size_t ReplayTransport::call_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t total = 0;
  for (const auto& [op, n] : calls_) total += n;
  return total;
}

std::size_t ReplayTransport::call_count(const std::string& operation) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = calls_.find(operation);
  return it == calls_.end() ? 0 : it->second;
}

}  // namespace linkq::kg
