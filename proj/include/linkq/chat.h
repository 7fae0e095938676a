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

#ifndef LINKQ_CHAT_H_
#define LINKQ_CHAT_H_

#include <string>
#include <string_view>

#include "linkq/clock.h"

namespace linkq {

enum class Role { kSystem, kUser, kAssistant };

// Directive traffic between the LLM and the system is internal; it stays
// out of the default transcript view.
enum class Visibility { kShown, kInternalProtocol };

// Who produced a message's content. The UI styles KG and LLM output
// differently.
enum class Provenance { kUser, kLlm, kKg, kSystem };

struct ChatMessage {
  Role role = Role::kUser;
  std::string content;
  Clock::time_point timestamp{};
  Visibility visibility = Visibility::kShown;
  Provenance provenance = Provenance::kUser;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

std::string_view RoleName(Role role);
std::string_view VisibilityName(Visibility visibility);
std::string_view ProvenanceName(Provenance provenance);
Provenance DefaultProvenance(Role role);

}  // namespace linkq

#endif  // LINKQ_CHAT_H_
