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

#ifndef LINKQ_SPARQL_LEXER_H_
#define LINKQ_SPARQL_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "linkq/sparql/ast.h"

namespace linkq::sparql {

enum class TokenKind {
  kEnd,
  kIriRef,         // <...>; text excludes the brackets
  kPrefixedName,   // pfx:local or pfx: ; text is the whole name
  kVariable,       // ?x / $x ; text is the bare name
  kString,         // text is the decoded lexical form
  kLangTag,        // @en ; text excludes '@'
  kInteger,
  kDecimal,
  kDouble,
  kWord,           // bare word: keyword, function name, 'a', true/false
  kPunct,          // { } ( ) [ ] . ; , * / | ^ + - ! = != < > <= >= && || ? ^^
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourcePosition position;
  // End offset (exclusive) in the source.
  std::size_t end = 0;
};

// Thrown by the lexer and parser; never escapes the public API.
struct ParseFailure {
  SyntaxError error;
};

// Splits a query into tokens, skipping whitespace and '#' comments.
// Throws ParseFailure on unterminated strings or stray characters.
std::vector<Token> Tokenize(std::string_view text);

}  // namespace linkq::sparql

#endif  // LINKQ_SPARQL_LEXER_H_
