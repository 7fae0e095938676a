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

#include "linkq/chat.h"

namespace linkq {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kSystem: return "system";
    case Role::kUser: return "user";
    case Role::kAssistant: return "assistant";
  }
  return "user";
}

std::string_view VisibilityName(Visibility visibility) {
  return visibility == Visibility::kShown ? "shown" : "internalProtocol";
}

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kUser: return "user";
    case Provenance::kLlm: return "llm";
    case Provenance::kKg: return "kg";
    case Provenance::kSystem: return "system";
  }
  return "system";
}

Provenance DefaultProvenance(Role role) {
  switch (role) {
    case Role::kUser: return Provenance::kUser;
    case Role::kAssistant: return Provenance::kLlm;
    case Role::kSystem: return Provenance::kSystem;
  }
  return Provenance::kSystem;
}

}  // namespace linkq
