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

#include "linkq/sparql/ast.h"

namespace linkq::sparql {

Term Term::Entity(std::string id, std::string prefix) {
  Term t;
  t.kind = Kind::kEntity;
  t.value = std::move(id);
  t.prefix = std::move(prefix);
  return t;
}

Term Term::Property(std::string id, std::string prefix) {
  Term t;
  t.kind = Kind::kProperty;
  t.value = std::move(id);
  t.prefix = std::move(prefix);
  return t;
}

Term Term::Variable(std::string name) {
  Term t;
  t.kind = Kind::kVariable;
  t.value = std::move(name);
  return t;
}

Term Term::Literal(std::string lexical, std::string datatype,
                   std::string language) {
  Term t;
  t.kind = Kind::kLiteral;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype);
  t.language = std::move(language);
  return t;
}

Term Term::OtherIri(std::string text) {
  Term t;
  t.kind = Kind::kOtherIri;
  t.value = std::move(text);
  return t;
}

namespace {

std::string EscapeString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

}  // namespace

std::string Term::ToQueryText() const {
  switch (kind) {
    case Kind::kEntity:
    case Kind::kProperty:
      return prefix + ":" + value;
    case Kind::kVariable:
      return "?" + value;
    case Kind::kOtherIri:
      return value;
    case Kind::kLiteral:
      if (!language.empty()) return EscapeString(value) + "@" + language;
      if (!datatype.empty()) return EscapeString(value) + "^^<" + datatype + ">";
      return EscapeString(value);
  }
  return value;
}

}  // namespace linkq::sparql
