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

#include "linkq/error.h"

namespace linkq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kEmptyTerm: return "EmptyTerm";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kMalformedDirective: return "MalformedDirective";
    case ErrorCode::kMissingBinding: return "MissingBinding";
    case ErrorCode::kMissingLabel: return "MissingLabel";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kInvalidQuery: return "InvalidQuery";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kInvalidRequest: return "InvalidRequest";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNoQueryBlock: return "NoQueryBlock";
    case ErrorCode::kLlmUnavailable: return "LlmUnavailable";
    case ErrorCode::kScriptExhausted: return "ScriptExhausted";
    case ErrorCode::kKgUnavailable: return "KgUnavailable";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kQueryRejected: return "QueryRejected";
    case ErrorCode::kTimeout: return "Timeout";
  }
  return "Unknown";
}

bool IsUpstreamError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLlmUnavailable:
    case ErrorCode::kScriptExhausted:
    case ErrorCode::kKgUnavailable:
    case ErrorCode::kQueryRejected:
    case ErrorCode::kTimeout:
    case ErrorCode::kNoQueryBlock:
      return true;
    default:
      return false;
  }
}

}  // namespace linkq
