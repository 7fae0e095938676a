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

#include "linkq/protocol/session_state.h"

namespace linkq::protocol {

std::string_view QueryOriginName(QueryOrigin origin) {
  return origin == QueryOrigin::kLlmGenerated ? "llmGenerated" : "userEdited";
}

std::vector<ChatMessage> SessionState::Transcript(bool include_internal) const {
  std::vector<ChatMessage> out;
  for (const ChatMessage& m : transcript) {
    if (include_internal || m.visibility == Visibility::kShown) out.push_back(m);
  }
  return out;
}

std::string SessionState::LastUserText() const {
  for (auto it = transcript.rbegin(); it != transcript.rend(); ++it) {
    if (it->role == Role::kUser && it->visibility == Visibility::kShown) {
      return it->content;
    }
  }
  return "";
}

}  // namespace linkq::protocol
