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

#include "linkq/service/http_api.h"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "linkq/error.h"
#include "linkq/service/json_views.h"

namespace linkq::service {
namespace {

constexpr const char* kJson = "application/json";
constexpr const char* kSessionPath = "/sessions/([0-9a-zA-Z]+)";

void Reply(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

// Runs `handler`, mapping failures to structured error payloads.
template <typename Handler>
httplib::Server::Handler Guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      Reply(res, HttpStatusFor(e.code()), ErrorJson(e));
    } catch (const std::exception& e) {
      spdlog::error("http: {} {} failed: {}", req.method, req.path, e.what());
      Reply(res, 500,
            {{"error", {{"code", "Internal"}, {"message", e.what()}}}});
    }
  };
}

std::string BodyField(const httplib::Request& req, const char* field) {
  nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw Error(ErrorCode::kInvalidRequest, "request body must be a JSON object");
  }
  auto it = body.find(field);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::kInvalidRequest,
                std::string("request body needs a string field \"") + field + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

void RegisterRoutes(httplib::Server& server, SessionService& service) {
  const std::string session = kSessionPath;

  server.Post("/sessions", Guarded([&service](const httplib::Request&,
                                              httplib::Response& res) {
    std::string id = service.CreateSession();
    Reply(res, 201, ToJson(service.Snapshot(id)));
  }));

  server.Get(session, Guarded([&service](const httplib::Request& req,
                                         httplib::Response& res) {
    Reply(res, 200, ToJson(service.Snapshot(req.matches[1])));
  }));

  server.Post(session + "/messages",
              Guarded([&service](const httplib::Request& req,
                                 httplib::Response& res) {
                Reply(res, 200,
                      ToJson(service.PostMessage(req.matches[1],
                                                 BodyField(req, "text"))));
              }));

  server.Post(session + "/preview",
              Guarded([&service](const httplib::Request& req,
                                 httplib::Response& res) {
                Reply(res, 200,
                      ToJson(service.PreviewQuery(req.matches[1],
                                                  BodyField(req, "query"))));
              }));

  server.Post(session + "/run",
              Guarded([&service](const httplib::Request& req,
                                 httplib::Response& res) {
                Reply(res, 200,
                      ToJson(service.RunQuery(req.matches[1],
                                              BodyField(req, "query"))));
              }));

  server.Post(session + "/editor",
              Guarded([&service](const httplib::Request& req,
                                 httplib::Response& res) {
                service.SetEditorQuery(req.matches[1], BodyField(req, "query"));
                Reply(res, 200, ToJson(service.Snapshot(req.matches[1])));
              }));

  server.Get(session + "/history",
             Guarded([&service](const httplib::Request& req,
                                httplib::Response& res) {
               nlohmann::json entries = nlohmann::json::array();
               for (const auto& e : service.GetHistory(req.matches[1])) {
                 entries.push_back(ToJson(e));
               }
               Reply(res, 200, {{"history", entries}});
             }));

  server.Get(session + "/transcript",
             Guarded([&service](const httplib::Request& req,
                                httplib::Response& res) {
               std::string flag = req.get_param_value("includeInternal");
               if (!flag.empty() && flag != "true" && flag != "false") {
                 throw Error(ErrorCode::kInvalidRequest,
                             "includeInternal must be true or false");
               }
               nlohmann::json messages = nlohmann::json::array();
               for (const auto& m :
                    service.GetTranscript(req.matches[1], flag == "true")) {
                 messages.push_back(ToJson(m));
               }
               Reply(res, 200, {{"messages", messages}});
             }));

  server.Get(session + "/results/latest\\.csv",
             Guarded([&service](const httplib::Request& req,
                                httplib::Response& res) {
               res.status = 200;
               res.set_header("Content-Disposition",
                              "attachment; filename=\"results.csv\"");
               res.set_content(service.LatestCsv(req.matches[1]),
                               "text/csv; charset=utf-8");
             }));
}

HttpApiServer::HttpApiServer(SessionService& service)
    : server_(std::make_unique<httplib::Server>()) {
  RegisterRoutes(*server_, service);
}

HttpApiServer::~HttpApiServer() { Stop(); }

int HttpApiServer::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

void HttpApiServer::Listen() { server_->listen_after_bind(); }

void HttpApiServer::Stop() {
  if (server_) server_->stop();
}

}  // namespace linkq::service
