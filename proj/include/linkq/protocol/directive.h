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

#ifndef LINKQ_PROTOCOL_DIRECTIVE_H_
#define LINKQ_PROTOCOL_DIRECTIVE_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "linkq/ids.h"

namespace linkq::protocol {

struct EntitySearch {
  std::string term;
  friend bool operator==(const EntitySearch&, const EntitySearch&) = default;
};

struct PropertiesSearch {
  EntityId entity;
  friend bool operator==(const PropertiesSearch&,
                         const PropertiesSearch&) = default;
};

struct EntityPropertySearch {
  EntityId entity;
  PropertyId property;
  friend bool operator==(const EntityPropertySearch&,
                         const EntityPropertySearch&) = default;
};

struct Stop {
  friend bool operator==(const Stop&, const Stop&) = default;
};

struct BuildQuery {
  friend bool operator==(const BuildQuery&, const BuildQuery&) = default;
};

using Directive = std::variant<EntitySearch, PropertiesSearch,
                               EntityPropertySearch, Stop, BuildQuery>;

inline constexpr std::string_view kEntitySearchPrefix = "ENTITY SEARCH:";
inline constexpr std::string_view kPropertiesSearchPrefix = "PROPERTIES SEARCH:";
inline constexpr std::string_view kEntityPropertySearchPrefix =
    "ENTITY PROPERTY SEARCH:";
inline constexpr std::string_view kStopKeyword = "STOP";
inline constexpr std::string_view kBuildQueryKeyword = "BUILD QUERY";

// Parses one whole assistant message. The keyword must open the message
// (after trimming) and is matched case-sensitively; a single trailing period
// is tolerated. Search arguments are read from the first line only.
//
// Returns nullopt for ordinary prose. Throws Error(kMalformedDirective) when
// a keyword is present but its arguments are unusable.
std::optional<Directive> ParseDirective(std::string_view assistant_text);

// Canonical text without a trailing period. For an EntitySearch the term
// must be trimmed, single-line, non-empty and must not end in '.', otherwise
// ParseDirective would not give it back unchanged.
std::string RenderDirective(const Directive& directive);

// True when `term` survives a render/parse round trip unchanged.
bool IsCanonicalSearchTerm(std::string_view term);

std::string_view DirectiveName(const Directive& directive);

}  // namespace linkq::protocol

#endif  // LINKQ_PROTOCOL_DIRECTIVE_H_
