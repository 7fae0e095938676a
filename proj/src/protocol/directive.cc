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

#include "linkq/protocol/directive.h"

#include <cctype>
#include <vector>

#include "linkq/error.h"
#include "linkq/text.h"

namespace linkq::protocol {
namespace {

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

// A bare keyword only counts when it is not the start of a longer word,
// so "STOPPED" is prose.
bool KeywordBoundary(std::string_view rest) {
  if (rest.empty()) return true;
  unsigned char c = static_cast<unsigned char>(rest.front());
  return !(std::isalnum(c) || c == '_');
}

std::string_view FirstLine(std::string_view text) {
  std::size_t end = text.find_first_of("\r\n");
  return end == std::string_view::npos ? text : text.substr(0, end);
}

std::string_view StripOnePeriod(std::string_view text) {
  if (!text.empty() && text.back() == '.') text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> SplitWords(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

[[noreturn]] void Malformed(std::string_view prefix, std::string_view args,
                            std::string_view expected) {
  throw Error(ErrorCode::kMalformedDirective,
              std::string(prefix) + " expects " + std::string(expected) +
                  ", got '" + std::string(args) + "'");
}

std::string_view Arguments(std::string_view message, std::string_view prefix) {
  return StripOnePeriod(Trim(FirstLine(message.substr(prefix.size()))));
}

}  // namespace

std::optional<Directive> ParseDirective(std::string_view assistant_text) {
  std::string_view text = Trim(assistant_text);

  if (StartsWith(text, kEntityPropertySearchPrefix)) {
    std::string_view args = Arguments(text, kEntityPropertySearchPrefix);
    std::vector<std::string_view> words = SplitWords(args);
    if (words.size() != 2 || !IsEntityIdText(words[0]) ||
        !IsPropertyIdText(words[1])) {
      Malformed(kEntityPropertySearchPrefix, args,
                "an entity ID and a property ID, e.g. Q123 P456");
    }
    return EntityPropertySearch{EntityId(words[0]), PropertyId(words[1])};
  }
  if (StartsWith(text, kPropertiesSearchPrefix)) {
    std::string_view args = Arguments(text, kPropertiesSearchPrefix);
    if (!IsEntityIdText(args)) {
      Malformed(kPropertiesSearchPrefix, args, "one entity ID, e.g. Q312");
    }
    return PropertiesSearch{EntityId(args)};
  }
  if (StartsWith(text, kEntitySearchPrefix)) {
    std::string_view args = Arguments(text, kEntitySearchPrefix);
    if (args.empty()) Malformed(kEntitySearchPrefix, args, "a search term");
    return EntitySearch{std::string(args)};
  }
  if (StartsWith(text, kStopKeyword) &&
      KeywordBoundary(text.substr(kStopKeyword.size()))) {
    return Stop{};
  }
  if (StartsWith(text, kBuildQueryKeyword) &&
      KeywordBoundary(text.substr(kBuildQueryKeyword.size()))) {
    return BuildQuery{};
  }
  return std::nullopt;
}

std::string RenderDirective(const Directive& directive) {
  struct Visitor {
    std::string operator()(const EntitySearch& d) const {
      return std::string(kEntitySearchPrefix) + " " + d.term;
    }
    std::string operator()(const PropertiesSearch& d) const {
      return std::string(kPropertiesSearchPrefix) + " " + d.entity.str();
    }
    std::string operator()(const EntityPropertySearch& d) const {
      return std::string(kEntityPropertySearchPrefix) + " " + d.entity.str() +
             " " + d.property.str();
    }
    std::string operator()(const Stop&) const {
      return std::string(kStopKeyword);
    }
    std::string operator()(const BuildQuery&) const {
      return std::string(kBuildQueryKeyword);
    }
  };
  return std::visit(Visitor{}, directive);
}

bool IsCanonicalSearchTerm(std::string_view term) {
  return !term.empty() && Trim(term) == term &&
         term.find_first_of("\r\n") == std::string_view::npos &&
         term.back() != '.';
}

std::string_view DirectiveName(const Directive& directive) {
  static constexpr std::string_view kNames[] = {
      "EntitySearch", "PropertiesSearch", "EntityPropertySearch", "Stop",
      "BuildQuery"};
  return kNames[directive.index()];
}

}  // namespace linkq::protocol
