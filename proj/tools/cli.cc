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

#include "cli.h"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "linkq/error.h"
#include "linkq/kg/kg_client.h"
#include "linkq/kg/transports.h"
#include "linkq/llm/llm_client.h"
#include "linkq/prompts/prompt_library.h"
#include "linkq/protocol/engine.h"
#include "linkq/results/pipeline.h"
#include "linkq/service/http_api.h"
#include "linkq/service/preview.h"
#include "linkq/service/session_service.h"
#include "linkq/sparql/analysis.h"
#include "linkq/text.h"

namespace linkq::cli {
namespace {

constexpr const char* kScriptFile = "llm_script.json";

std::size_t DisplayWidth(const std::string& text) {
  std::size_t width = 0;
  for (unsigned char c : text) width += (c & 0xC0) != 0x80;
  return width;
}

std::string OneLine(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return text;
}

std::string EnvOr(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : fallback;
}

// Everything a command needs, wired for the chosen fixture mode.
class Runtime {
 public:
  explicit Runtime(const CliConfig& config)
      : prompts_(prompts::PromptLibrary::LoadDefault()),
        kg_config_(kg::KgConfig::FromEnv()) {
    Clock& clock = SystemClock::Instance();
    llm::OpenAiConfig llm_config = llm::OpenAiConfig::FromEnv();
    if (!config.model.empty()) llm_config.model = config.model;

    if (config.fixture_mode == FixtureMode::kReplay) {
      replay_ = std::make_unique<kg::ReplayTransport>(config.fixture_dir);
      kg_transport_ = replay_.get();
      std::string script = config.fixture_dir + "/" + kScriptFile;
      llm_ = std::make_unique<llm::ScriptedLlm>(
          std::filesystem::exists(script) ? llm::LoadScript(script)
                                          : std::vector<std::string>{});
    } else {
      limited_ = std::make_unique<kg::RateLimitedTransport>(
          http_, clock, std::chrono::milliseconds(100));
      kg_transport_ = limited_.get();
      llm_ = std::make_unique<llm::OpenAiClient>(llm_config, http_, clock);
      if (config.fixture_mode == FixtureMode::kRecord) {
        recorder_ = std::make_unique<kg::RecordingTransport>(*limited_,
                                                             config.fixture_dir);
        kg_transport_ = recorder_.get();
        recording_llm_ = std::make_unique<llm::RecordingLlm>(
            *llm_, config.fixture_dir + "/" + kScriptFile);
      }
    }
    protocol::EngineConfig engine_config;
    engine_config.model = config.model;
    engine_ = std::make_unique<protocol::ProtocolEngine>(prompts_, llm(), clock,
                                                         engine_config);
    service_ = std::make_unique<service::SessionService>(
        *engine_, [this] { return NewKgClient(); }, clock);
  }

  std::unique_ptr<kg::KgClient> NewKgClient() {
    return kg::MakeSessionClient(kg_config_, *kg_transport_);
  }
  llm::LlmClient& llm() {
    return recording_llm_ ? static_cast<llm::LlmClient&>(*recording_llm_) : *llm_;
  }
  service::SessionService& service() { return *service_; }

 private:
  prompts::PromptLibrary prompts_;
  kg::KgConfig kg_config_;
  HttplibTransport http_;
  std::unique_ptr<kg::RateLimitedTransport> limited_;
  std::unique_ptr<kg::RecordingTransport> recorder_;
  std::unique_ptr<kg::ReplayTransport> replay_;
  HttpTransport* kg_transport_ = nullptr;
  std::unique_ptr<llm::LlmClient> llm_;
  std::unique_ptr<llm::RecordingLlm> recording_llm_;
  std::unique_ptr<protocol::ProtocolEngine> engine_;
  std::unique_ptr<service::SessionService> service_;
};

void PrintIdTable(const service::QueryPreviewBundle& bundle, std::ostream& out) {
  out << "Entity-relation table:\n";
  if (bundle.rows.empty()) {
    out << "(no Wikidata IDs in the query)\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : bundle.rows) {
      rows.push_back({row.id,
                      row.kind == service::IdKind::kEntity ? "entity" : "property",
                      row.missing ? "(unknown)" : row.label, row.description});
    }
    out << RenderTextTable({"ID", "Kind", "Label", "Description"}, rows);
  }
  if (!bundle.labels_error.empty()) {
    out << "(labels unavailable: " << bundle.labels_error << ")\n";
  }
}

void PrintSyntaxError(const sparql::SyntaxError& error, std::ostream& out) {
  out << "Validation: " << sparql::FormatSyntaxError(error) << "\n";
}

int WriteCsv(const std::string& path, const std::string& csv, std::ostream& err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return kExitUserError;
  }
  file << csv;
  err << "wrote " << path << "\n";
  return kExitOk;
}

int PrintRun(const service::RunResult& run, std::ostream& out) {
  const protocol::RunOutcome& o = run.outcome;
  if (!o.endpoint_error.empty()) {
    out << "Endpoint error: " << o.endpoint_error << "\n\n";
  }
  out << "Results (" << o.table.rows.size() << " rows):\n"
      << RenderTextTable(o.table.columns, o.table.rows) << "\n";
  if (o.summary_error.empty()) {
    out << "Summary:\n" << o.summary << "\n";
  } else {
    out << "Summary unavailable: " << o.summary_error << "\n";
  }
  return o.endpoint_error.empty() ? kExitOk : kExitUpstreamError;
}

int Ask(const CliConfig& config, Runtime& runtime, std::ostream& out,
        std::ostream& err) {
  service::SessionService& svc = runtime.service();
  std::string id = svc.CreateSession();
  service::ChatDelta delta = svc.PostMessage(id, *config.question);
  out << "Question: " << *config.question << "\n\n";
  if (!delta.generated) {
    for (const auto& m : delta.messages) {
      if (m.role == Role::kAssistant && m.visibility == Visibility::kShown) {
        out << "Assistant: " << m.content << "\n";
      }
    }
    return kExitOk;
  }
  if (delta.resolution && delta.resolution->stalled) {
    out << "Note: ID resolution stopped at the iteration cap.\n";
  }
  if (delta.resolution && delta.resolution->no_ids_resolved) {
    out << "Note: no IDs were resolved from Wikidata.\n";
  }
  const std::string& query = delta.generated->query;
  out << "Generated query:\n" << query << "\n\n";
  if (!delta.generated->explanation.empty()) {
    out << "Explanation:\n" << delta.generated->explanation << "\n\n";
  }
  service::QueryPreviewBundle preview = svc.PreviewQuery(id, query);
  if (!preview.valid()) {
    PrintSyntaxError(*preview.syntax_error, out);
    return kExitUpstreamError;
  }
  PrintIdTable(preview, out);
  out << "\n";
  service::RunResult run = svc.RunQuery(id, query);
  int status = PrintRun(run, out);
  if (config.output_path) {
    int written = WriteCsv(*config.output_path, svc.LatestCsv(id), err);
    if (written != kExitOk) return written;
  }
  return status;
}

int Preview(const CliConfig& config, Runtime& runtime, std::ostream& out) {
  std::string query = ReadFileOrThrow(*config.query_file);
  auto kg = runtime.NewKgClient();
  service::QueryPreviewBundle bundle = service::BuildPreview(query, kg.get());
  if (!bundle.valid()) {
    PrintSyntaxError(*bundle.syntax_error, out);
    return kExitUserError;
  }
  out << "Validation: ok\n\n";
  PrintIdTable(bundle, out);
  out << "\nQuery graph (DOT):\n" << sparql::ToDot(*bundle.graph);
  return kExitOk;
}

void PrintMessages(const std::vector<ChatMessage>& messages, bool internal,
                   std::ostream& out) {
  for (const auto& m : messages) {
    if (m.visibility != Visibility::kShown && !internal) continue;
    if (m.role == Role::kUser) continue;
    out << "[" << RoleName(m.role) << "/" << ProvenanceName(m.provenance)
        << "] " << m.content << "\n";
  }
}

int Repl(const CliConfig& config, Runtime& runtime, std::istream& in,
         std::ostream& out, std::ostream& err) {
  service::SessionService& svc = runtime.service();
  std::string id = svc.CreateSession();
  bool internal = false;
  out << "Ask a question about Wikidata. Commands: :run, :preview, "
         ":history, :internal, :quit\n";
  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    std::string text(Trim(line));
    if (text.empty()) continue;
    if (text == ":quit" || text == ":q") break;
    try {
      if (text == ":internal") {
        internal = !internal;
        out << "internal protocol messages " << (internal ? "shown" : "hidden")
            << "\n";
      } else if (text == ":history") {
        for (const auto& e : svc.GetHistory(id)) {
          out << (e.origin == protocol::QueryOrigin::kLlmGenerated ? "llm " : "user")
              << (e.executed ? " [run] " : "       ") << OneLine(e.query) << "\n";
        }
      } else if (text == ":preview" || text == ":run") {
        auto generated = svc.Snapshot(id).generated;
        if (!generated) {
          out << "no generated query yet\n";
          continue;
        }
        if (text == ":preview") {
          auto bundle = svc.PreviewQuery(id, generated->query);
          if (!bundle.valid()) {
            PrintSyntaxError(*bundle.syntax_error, out);
          } else {
            PrintIdTable(bundle, out);
          }
        } else {
          PrintRun(svc.RunQuery(id, generated->query), out);
          if (config.output_path) {
            WriteCsv(*config.output_path, svc.LatestCsv(id), err);
          }
        }
      } else {
        service::ChatDelta delta = svc.PostMessage(id, text);
        PrintMessages(delta.messages, internal, out);
        if (delta.generated) {
          out << "Generated query (use :preview or :run):\n"
              << delta.generated->query << "\n";
        }
      }
    } catch (const Error& e) {
      err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    }
  }
  return kExitOk;
}

int Serve(const CliConfig& config, Runtime& runtime, std::ostream& out,
          std::ostream& err) {
  service::HttpApiServer server(runtime.service());
  int port = server.Bind(config.host, config.port);
  if (port < 0) {
    err << "error: cannot listen on " << config.host << ":" << config.port << "\n";
    return kExitUserError;
  }
  out << "listening on http://" << config.host << ":" << port << std::endl;
  server.Listen();
  return kExitOk;
}

}  // namespace

std::string RenderTextTable(const std::vector<std::string>& headers,
                            const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(headers.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], DisplayWidth(OneLine(cells[i])));
    }
  };
  measure(headers);
  for (const auto& row : rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < widths.size(); ++i) {
      std::string cell = i < cells.size() ? OneLine(cells[i]) : "";
      out += cell;
      if (i + 1 < widths.size()) {
        out += std::string(widths[i] - DisplayWidth(cell) + 2, ' ');
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(headers);
  std::vector<std::string> rule;
  for (std::size_t w : widths) rule.push_back(std::string(w, '-'));
  out += line(rule);
  for (const auto& row : rows) out += line(row);
  return out;
}

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Ask questions about Wikidata in natural language."};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string fixtures;
  bool record = false;
  bool live = false;
  std::string output;
  app.add_option("--fixtures", fixtures,
                 "Fixture directory (default: $LINKQ_FIXTURE_DIR)");
  auto* record_flag =
      app.add_flag("--record", record, "Call live services and record fixtures");
  app.add_flag("--live", live, "Call live services even if fixtures are set")
      ->excludes(record_flag);
  app.add_option("--model", config.model, "LLM model name");
  app.add_option("--output", output, "Write the results table as CSV");
  app.add_flag("-v,--verbose", config.verbose, "Debug logging on stderr");

  auto* repl = app.add_subcommand("repl", "Interactive chat (default)");
  auto* ask = app.add_subcommand("ask", "Answer one question end to end");
  std::string question;
  ask->add_option("question", question, "Question in natural language")
      ->required();
  auto* preview = app.add_subcommand("preview", "Validate and preview a query");
  std::string query_file;
  preview->add_option("--query", query_file, "SPARQL query file")->required();
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", config.host, "Interface to bind");
  int port = -1;
  serve->add_option("--port", port, "Port (default: $LINKQ_PORT or 8080)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = ask->parsed()       ? ask
                             : preview->parsed() ? preview
                                                 : &app;
    err << failed->help();
    return kExitUserError;
  }

  // Logs go to `err` so that `out` carries only the command's result.
  auto logger = std::make_shared<spdlog::logger>(
      "linkq", std::make_shared<spdlog::sinks::ostream_sink_mt>(err));
  spdlog::set_default_logger(logger);
  spdlog::set_level(config.verbose ? spdlog::level::debug : spdlog::level::warn);

  if (ask->parsed()) {
    config.mode = Mode::kAsk;
    config.question = question;
  } else if (preview->parsed()) {
    config.mode = Mode::kPreview;
    config.query_file = query_file;
  } else if (serve->parsed()) {
    config.mode = Mode::kServe;
    config.port = port >= 0 ? port : std::stoi(EnvOr("LINKQ_PORT", "8080"));
  } else {
    (void)repl;
    config.mode = Mode::kRepl;
  }
  if (!output.empty()) config.output_path = output;
  config.fixture_dir = fixtures.empty() ? EnvOr("LINKQ_FIXTURE_DIR", "") : fixtures;
  if (record) {
    if (config.fixture_dir.empty()) {
      err << "error: --record needs --fixtures or LINKQ_FIXTURE_DIR\n";
      return kExitUserError;
    }
    config.fixture_mode = FixtureMode::kRecord;
  } else if (!live && !config.fixture_dir.empty()) {
    config.fixture_mode = FixtureMode::kReplay;
  }

  try {
    Runtime runtime(config);
    switch (config.mode) {
      case Mode::kAsk: return Ask(config, runtime, out, err);
      case Mode::kPreview: return Preview(config, runtime, out);
      case Mode::kServe: return Serve(config, runtime, out, err);
      case Mode::kRepl: return Repl(config, runtime, in, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return IsUpstreamError(e.code()) ? kExitUpstreamError : kExitUserError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitOk;
}

}  // namespace linkq::cli
