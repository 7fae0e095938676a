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

#ifndef LINKQ_ERROR_H_
#define LINKQ_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkq {

// Failure categories shared by every layer. The HTTP API and the CLI map
// these onto status codes and exit codes.
enum class ErrorCode {
  kEmptyInput,
  kEmptyTerm,
  kInvalidId,
  kMalformedDirective,
  kMissingBinding,
  kMissingLabel,
  kMalformedDocument,
  kInvalidQuery,
  kInvalidState,
  kInvalidRequest,
  kNotFound,
  kNoQueryBlock,
  kLlmUnavailable,
  kScriptExhausted,
  kKgUnavailable,
  kUnknownEntity,
  kQueryRejected,
  kTimeout,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for failures caused by an upstream service (LLM or KG) rather than
// by the caller's input.
bool IsUpstreamError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linkq

#endif  // LINKQ_ERROR_H_
