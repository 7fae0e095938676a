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

#ifndef LINKQ_IDS_H_
#define LINKQ_IDS_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace linkq {

// True when `text` is 'Q' or 'P' (per `letter`) followed by one or more
// ASCII digits.
bool IsWikidataId(std::string_view text, char letter);

inline bool IsEntityIdText(std::string_view text) {
  return IsWikidataId(text, 'Q');
}
inline bool IsPropertyIdText(std::string_view text) {
  return IsWikidataId(text, 'P');
}

// Wikidata item identifier, e.g. Q312. Always syntactically valid.
class EntityId {
 public:
  // Throws Error(kInvalidId) when `text` is not a Q-identifier.
  explicit EntityId(std::string_view text);
  static std::optional<EntityId> TryParse(std::string_view text);

  const std::string& str() const { return text_; }

  friend bool operator==(const EntityId&, const EntityId&) = default;
  friend auto operator<=>(const EntityId&, const EntityId&) = default;

 private:
  struct Unchecked {};
  EntityId(Unchecked, std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// Wikidata property identifier, e.g. P112. Always syntactically valid.
class PropertyId {
 public:
  explicit PropertyId(std::string_view text);
  static std::optional<PropertyId> TryParse(std::string_view text);

  const std::string& str() const { return text_; }

  friend bool operator==(const PropertyId&, const PropertyId&) = default;
  friend auto operator<=>(const PropertyId&, const PropertyId&) = default;

 private:
  struct Unchecked {};
  PropertyId(Unchecked, std::string text) : text_(std::move(text)) {}
  std::string text_;
};

using KgId = std::variant<EntityId, PropertyId>;

// Parses either identifier kind; throws Error(kInvalidId) otherwise.
KgId ParseKgId(std::string_view text);
const std::string& KgIdText(const KgId& id);

}  // namespace linkq

#endif  // LINKQ_IDS_H_
