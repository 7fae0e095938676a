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

#ifndef LINKQ_SERVICE_HTTP_API_H_
#define LINKQ_SERVICE_HTTP_API_H_

#include <memory>
#include <string>

#include "linkq/service/session_service.h"

namespace httplib {
class Server;
}

namespace linkq::service {

// Routes:
//   POST /sessions
//   GET  /sessions/{id}
//   POST /sessions/{id}/messages      {"text": ...}
//   POST /sessions/{id}/preview       {"query": ...}
//   POST /sessions/{id}/run           {"query": ...}
//   POST /sessions/{id}/editor        {"query": ...}
//   GET  /sessions/{id}/history
//   GET  /sessions/{id}/transcript?includeInternal=true|false
//   GET  /sessions/{id}/results/latest.csv
// Errors come back as {"error": {"code", "message"}}.
void RegisterRoutes(httplib::Server& server, SessionService& service);

// Owns an httplib server bound to a port.
class HttpApiServer {
 public:
  explicit HttpApiServer(SessionService& service);
  ~HttpApiServer();

  // Binds to host:port (port 0 picks a free one) and returns the port, or
  // -1 on failure. Does not block.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Blocks.
  void Listen();
  void Stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace linkq::service

#endif  // LINKQ_SERVICE_HTTP_API_H_
