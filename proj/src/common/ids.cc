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

#include "linkq/ids.h"

#include <algorithm>

#include "linkq/error.h"

namespace linkq {

bool IsWikidataId(std::string_view text, char letter) {
  if (text.size() < 2 || text.front() != letter) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

EntityId::EntityId(std::string_view text) : text_(text) {
  if (!IsEntityIdText(text)) {
    throw Error(ErrorCode::kInvalidId,
                "not a Wikidata entity id: '" + std::string(text) + "'");
  }
}

std::optional<EntityId> EntityId::TryParse(std::string_view text) {
  if (!IsEntityIdText(text)) return std::nullopt;
  return EntityId(Unchecked{}, std::string(text));
}

PropertyId::PropertyId(std::string_view text) : text_(text) {
  if (!IsPropertyIdText(text)) {
    throw Error(ErrorCode::kInvalidId,
                "not a Wikidata property id: '" + std::string(text) + "'");
  }
}

std::optional<PropertyId> PropertyId::TryParse(std::string_view text) {
  if (!IsPropertyIdText(text)) return std::nullopt;
  return PropertyId(Unchecked{}, std::string(text));
}

KgId ParseKgId(std::string_view text) {
  if (auto entity = EntityId::TryParse(text)) return *entity;
  if (auto property = PropertyId::TryParse(text)) return *property;
  throw Error(ErrorCode::kInvalidId,
              "not a Wikidata id: '" + std::string(text) + "'");
}

const std::string& KgIdText(const KgId& id) {
  return std::visit([](const auto& v) -> const std::string& { return v.str(); },
                    id);
}

}  // namespace linkq
