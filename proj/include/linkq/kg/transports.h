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

#ifndef LINKQ_KG_TRANSPORTS_H_
#define LINKQ_KG_TRANSPORTS_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "linkq/clock.h"
#include "linkq/http.h"

namespace linkq::kg {

// Enforces a minimum gap between consecutive requests to the wrapped
// transport, across all threads.
class RateLimitedTransport final : public HttpTransport {
 public:
  RateLimitedTransport(HttpTransport& inner, Clock& clock,
                       std::chrono::milliseconds min_spacing);
  HttpResponse Send(const HttpRequest& request) override;

 private:
  HttpTransport& inner_;
  Clock& clock_;
  std::chrono::milliseconds min_spacing_;
  std::mutex mu_;
  bool has_last_ = false;
  Clock::time_point last_start_{};
};

// Remembers successful responses by request content. One instance per
// session, so repeated lookups within a conversation hit the network once.
class CachingTransport final : public HttpTransport {
 public:
  explicit CachingTransport(HttpTransport& inner) : inner_(inner) {}
  HttpResponse Send(const HttpRequest& request) override;

  std::size_t size() const;
  std::size_t misses() const;

 private:
  HttpTransport& inner_;
  mutable std::mutex mu_;
  std::map<std::string, HttpResponse> entries_;
  std::size_t misses_ = 0;
};

// Canonical text of the parts of a request that select its response:
// operation, method, query parameters and body. Host and headers are left
// out so fixtures survive endpoint overrides.
std::string CanonicalRequestKey(const HttpRequest& request);

std::uint64_t Fnv1a64(std::string_view text);

// "<operation>-<16 hex digits>.json"
std::string FixtureFileName(const HttpRequest& request);

// Writes each exchange to `directory` as a fixture envelope, then returns
// the live response unchanged. Transport failures are not recorded.
class RecordingTransport final : public HttpTransport {
 public:
  RecordingTransport(HttpTransport& inner, std::string directory);
  HttpResponse Send(const HttpRequest& request) override;

 private:
  HttpTransport& inner_;
  std::string directory_;
  std::mutex mu_;
};

// Serves responses from fixture envelopes and never touches the network.
// A request with no fixture yields a transport error naming the missing
// file, which callers surface as KgUnavailable.
class ReplayTransport final : public HttpTransport {
 public:
  explicit ReplayTransport(std::string directory);
  HttpResponse Send(const HttpRequest& request) override;

  std::size_t call_count() const;
  std::size_t call_count(const std::string& operation) const;

 private:
  std::string directory_;
  mutable std::mutex mu_;
  std::map<std::string, std::size_t> calls_;
};

}  // namespace linkq::kg

#endif  // LINKQ_KG_TRANSPORTS_H_
