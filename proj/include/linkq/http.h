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

#ifndef LINKQ_HTTP_H_
#define LINKQ_HTTP_H_

#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkq {

struct HttpRequest {
  // Logical operation name, used for logging and fixture file names.
  std::string operation;
  std::string method = "GET";
  // Absolute URL including scheme, host and path (no query string).
  std::string url;
  std::vector<std::pair<std::string, std::string>> query;
  std::map<std::string, std::string> headers;
  std::string body;
  std::chrono::milliseconds timeout{60000};
};

struct HttpResponse {
  // 0 when no response was received (connection failure).
  int status = 0;
  std::string body;
  std::map<std::string, std::string> headers;
  // Set when the transport itself failed; `status` is 0 in that case.
  std::string transport_error;
  bool timed_out = false;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse Send(const HttpRequest& request) = 0;
};

// cpp-httplib backed transport. Supports https when built with OpenSSL.
class HttplibTransport final : public HttpTransport {
 public:
  HttpResponse Send(const HttpRequest& request) override;
};

// RFC 3986 percent-encoding of everything except unreserved characters.
std::string PercentEncode(std::string_view text);
std::string EncodeQuery(
    const std::vector<std::pair<std::string, std::string>>& query);

struct ParsedUrl {
  std::string scheme_host_port;  // e.g. "https://query.wikidata.org"
  std::string path;              // e.g. "/sparql"
};
ParsedUrl SplitUrl(std::string_view url);

}  // namespace linkq

#endif  // LINKQ_HTTP_H_
