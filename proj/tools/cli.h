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

#ifndef LINKQ_TOOLS_CLI_H_
#define LINKQ_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linkq::cli {

enum class Mode { kRepl, kAsk, kPreview, kServe };
enum class FixtureMode { kLive, kRecord, kReplay };

struct CliConfig {
  Mode mode = Mode::kRepl;
  std::optional<std::string> question;
  std::optional<std::string> query_file;
  FixtureMode fixture_mode = FixtureMode::kLive;
  std::string fixture_dir;
  std::optional<std::string> output_path;
  std::string model;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool verbose = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitUpstreamError = 2;

// Entry point behind main(), with the streams injectable for tests.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

// Plain-text table with columns padded to the widest cell.
std::string RenderTextTable(const std::vector<std::string>& headers,
                            const std::vector<std::vector<std::string>>& rows);

}  // namespace linkq::cli

#endif  // LINKQ_TOOLS_CLI_H_
