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

#include "linkq/sparql/lexer.h"

#include <cstdint>

namespace linkq::sparql {
namespace {

bool IsAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsHigh(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool IsWordChar(char c) {
  return IsAlpha(c) || IsDigit(c) || c == '_' || IsHigh(c);
}
bool IsNameChar(char c) { return IsWordChar(c) || c == '-' || c == '.'; }
bool IsHex(char c) {
  return IsDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipSpaceAndComments();
      Token token;
      token.position = Position();
      if (pos_ >= text_.size()) {
        token.kind = TokenKind::kEnd;
        token.end = pos_;
        tokens.push_back(std::move(token));
        return tokens;
      }
      LexOne(token);
      token.end = pos_;
      tokens.push_back(std::move(token));
    }
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  // Moves forward, maintaining line/column.
  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }

  SourcePosition Position() const {
    return {pos_, line_, static_cast<int>(pos_ - line_start_) + 1};
  }

  [[noreturn]] void Fail(const SourcePosition& at, std::string message) const {
    throw ParseFailure{SyntaxError{at, std::move(message)}};
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        Advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  void LexOne(Token& token) {
    char c = Peek();
    if (c == '<') {
      if (TryIri(token)) return;
      LexPunct(token);
      return;
    }
    if (c == '"' || c == '\'') {
      LexString(token);
      return;
    }
    if ((c == '?' || c == '$') && IsWordChar(Peek(1))) {
      Advance();
      std::size_t start = pos_;
      while (IsWordChar(Peek())) Advance();
      token.kind = TokenKind::kVariable;
      token.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '$') Fail(token.position, "'$' must start a variable name");
    if (c == '@') {
      Advance();
      std::size_t start = pos_;
      while (IsAlpha(Peek())) Advance();
      if (pos_ == start) Fail(token.position, "empty language tag");
      while (Peek() == '-' && (IsAlpha(Peek(1)) || IsDigit(Peek(1)))) {
        Advance();
        while (IsAlpha(Peek()) || IsDigit(Peek())) Advance();
      }
      token.kind = TokenKind::kLangTag;
      token.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      LexNumber(token);
      return;
    }
    if (IsAlpha(c) || c == '_' || c == ':' || IsHigh(c)) {
      LexName(token);
      return;
    }
    LexPunct(token);
  }

  bool TryIri(Token& token) {
    std::size_t i = pos_ + 1;
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '>') {
        token.kind = TokenKind::kIriRef;
        token.text = std::string(text_.substr(pos_ + 1, i - pos_ - 1));
        Advance(i + 1 - pos_);
        return true;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
          c == '{' || c == '}' || c == '|' || c == '^' || c == '`' ||
          c == '\\') {
        return false;
      }
      ++i;
    }
    return false;
  }

  void LexString(Token& token) {
    char quote = Peek();
    bool long_form = Peek(1) == quote && Peek(2) == quote;
    Advance(long_form ? 3 : 1);
    std::string value;
    while (true) {
      if (pos_ >= text_.size()) Fail(token.position, "unterminated string");
      char c = Peek();
      if (long_form) {
        if (c == quote && Peek(1) == quote && Peek(2) == quote) {
          Advance(3);
          break;
        }
      } else if (c == quote) {
        Advance();
        break;
      } else if (c == '\n' || c == '\r') {
        Fail(token.position, "newline inside string literal");
      }
      if (c == '\\') {
        SourcePosition at = Position();
        Advance();
        char e = Peek();
        switch (e) {
          case 't': value.push_back('\t'); Advance(); break;
          case 'n': value.push_back('\n'); Advance(); break;
          case 'r': value.push_back('\r'); Advance(); break;
          case 'b': value.push_back('\b'); Advance(); break;
          case 'f': value.push_back('\f'); Advance(); break;
          case '"': value.push_back('"'); Advance(); break;
          case '\'': value.push_back('\''); Advance(); break;
          case '\\': value.push_back('\\'); Advance(); break;
          case 'u':
          case 'U': {
            int digits = e == 'u' ? 4 : 8;
            Advance();
            std::uint32_t cp = 0;
            for (int i = 0; i < digits; ++i) {
              char h = Peek();
              if (!IsHex(h)) Fail(at, "bad unicode escape");
              cp = cp * 16 + static_cast<std::uint32_t>(
                                 IsDigit(h) ? h - '0'
                                            : (h | 0x20) - 'a' + 10);
              Advance();
            }
            if (cp > 0x10FFFF) Fail(at, "unicode escape out of range");
            AppendUtf8(value, cp);
            break;
          }
          default:
            Fail(at, "unknown escape sequence in string");
        }
        continue;
      }
      value.push_back(c);
      Advance();
    }
    token.kind = TokenKind::kString;
    token.text = std::move(value);
  }

  void LexNumber(Token& token) {
    std::size_t start = pos_;
    bool decimal = false;
    bool exponent = false;
    while (IsDigit(Peek())) Advance();
    if (Peek() == '.' && IsDigit(Peek(1))) {
      decimal = true;
      Advance();
      while (IsDigit(Peek())) Advance();
    }
    if (Peek() == 'e' || Peek() == 'E') {
      std::size_t skip = (Peek(1) == '+' || Peek(1) == '-') ? 2 : 1;
      if (IsDigit(Peek(skip))) {
        exponent = true;
        Advance(skip);
        while (IsDigit(Peek())) Advance();
      }
    }
    token.kind = exponent  ? TokenKind::kDouble
                 : decimal ? TokenKind::kDecimal
                           : TokenKind::kInteger;
    token.text = std::string(text_.substr(start, pos_ - start));
  }

  void LexName(Token& token) {
    std::size_t start = pos_;
    std::size_t run = pos_;
    while (run < text_.size() && IsNameChar(text_[run])) ++run;
    if (run < text_.size() && text_[run] == ':') {
      if (run > start && text_[run - 1] == '.') {
        Fail(token.position, "prefix name may not end with '.'");
      }
      Advance(run + 1 - pos_);
      LexLocalName();
      token.kind = TokenKind::kPrefixedName;
      token.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    while (IsWordChar(Peek())) Advance();
    if (pos_ == start) Fail(token.position, "unexpected character");
    token.kind = TokenKind::kWord;
    token.text = std::string(text_.substr(start, pos_ - start));
  }

  void LexLocalName() {
    std::size_t last_good = pos_;
    while (pos_ < text_.size()) {
      char c = Peek();
      if (IsWordChar(c) || c == '-' || c == ':') {
        Advance();
        last_good = pos_;
      } else if (c == '.') {
        Advance();
      } else if (c == '%' && IsHex(Peek(1)) && IsHex(Peek(2))) {
        Advance(3);
        last_good = pos_;
      } else if (c == '\\' && Peek(1) != '\0' &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%")
                         .find(Peek(1)) != std::string_view::npos) {
        Advance(2);
        last_good = pos_;
      } else {
        break;
      }
    }
    // A trailing '.' terminates the triple, not the name.
    Rewind(last_good);
  }

  void Rewind(std::size_t to) {
    // Only ever rewinds over '.' characters on the current line.
    pos_ = to;
  }

  void LexPunct(Token& token) {
    static constexpr std::string_view kTwoChar[] = {"^^", "!=", "<=", ">=",
                                                     "&&", "||"};
    for (std::string_view op : kTwoChar) {
      if (text_.substr(pos_, 2) == op) {
        token.kind = TokenKind::kPunct;
        token.text = std::string(op);
        Advance(2);
        return;
      }
    }
    static constexpr std::string_view kSingle = "{}()[].;,*/|^+-!=<>?";
    char c = Peek();
    if (kSingle.find(c) == std::string_view::npos) {
      std::string shown = IsHigh(c) || static_cast<unsigned char>(c) < 0x20
                              ? "byte"
                              : std::string("'") + c + "'";
      Fail(token.position, "unexpected " + shown);
    }
    token.kind = TokenKind::kPunct;
    token.text = std::string(1, c);
    Advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  return Lexer(text).Run();
}

}  // namespace linkq::sparql
