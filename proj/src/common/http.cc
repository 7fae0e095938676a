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

#include "linkq/http.h"

#include <httplib.h>

namespace linkq {

std::string PercentEncode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size() * 3);
  for (unsigned char c : text) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' ||
        c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string EncodeQuery(
    const std::vector<std::pair<std::string, std::string>>& query) {
  std::string out;
  for (const auto& [key, value] : query) {
    if (!out.empty()) out.push_back('&');
    out += PercentEncode(key);
    out.push_back('=');
    out += PercentEncode(value);
  }
  return out;
}

ParsedUrl SplitUrl(std::string_view url) {
  auto scheme_end = url.find("://");
  auto path_start = scheme_end == std::string_view::npos
                        ? url.find('/')
                        : url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) {
    return {std::string(url), "/"};
  }
  return {std::string(url.substr(0, path_start)),
          std::string(url.substr(path_start))};
}

HttpResponse HttplibTransport::Send(const HttpRequest& request) {
  HttpResponse out;
  ParsedUrl parts = SplitUrl(request.url);
  std::string path = parts.path;
  if (!request.query.empty()) path += "?" + EncodeQuery(request.query);

  httplib::Client client(parts.scheme_host_port);
  if (!client.is_valid()) {
    out.transport_error = "unsupported url: " + request.url;
    return out;
  }
  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(request.timeout);
  auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      request.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  client.set_follow_location(true);

  httplib::Headers headers;
  std::string content_type = "application/octet-stream";
  for (const auto& [key, value] : request.headers) {
    if (key == "Content-Type") {
      content_type = value;
    } else {
      headers.emplace(key, value);
    }
  }

  httplib::Result result =
      request.method == "POST"
          ? client.Post(path, headers, request.body, content_type)
          : client.Get(path, headers);
  if (!result) {
    auto err = result.error();
    out.transport_error = httplib::to_string(err);
    out.timed_out = err == httplib::Error::Read ||
                    err == httplib::Error::ConnectionTimeout;
    return out;
  }
  out.status = result->status;
  out.body = result->body;
  for (const auto& [key, value] : result->headers) out.headers[key] = value;
  return out;
}

}  // namespace linkq
