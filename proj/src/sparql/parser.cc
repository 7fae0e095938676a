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

#include "linkq/sparql/parser.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "linkq/ids.h"
#include "linkq/sparql/lexer.h"

namespace linkq::sparql {

const PrefixMap& DefaultPrefixes() {
  static const PrefixMap kPrefixes = {
      {"wd", kEntityNamespace},
      {"wdt", kDirectClaimNamespace},
      {"p", kClaimNamespace},
      {"ps", kStatementNamespace},
      {"pq", kQualifierNamespace},
      {"psv", "http://www.wikidata.org/prop/statement/value/"},
      {"pqv", "http://www.wikidata.org/prop/qualifier/value/"},
      {"pr", "http://www.wikidata.org/prop/reference/"},
      {"prv", "http://www.wikidata.org/prop/reference/value/"},
      {"wdtn", "http://www.wikidata.org/prop/direct-normalized/"},
      {"wdno", "http://www.wikidata.org/prop/novalue/"},
      {"wds", "http://www.wikidata.org/entity/statement/"},
      {"wdv", "http://www.wikidata.org/value/"},
      {"wdref", "http://www.wikidata.org/reference/"},
      {"wikibase", "http://wikiba.se/ontology#"},
      {"bd", "http://www.bigdata.com/rdf#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"xsd", kXsdNamespace},
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"skos", "http://www.w3.org/2004/02/skos/core#"},
      {"schema", "http://schema.org/"},
      {"prov", "http://www.w3.org/ns/prov#"},
      {"geo", "http://www.opengis.net/ont/geosparql#"},
  };
  return kPrefixes;
}

namespace {

constexpr int kMaxNesting = 128;

const std::set<std::string>& BuiltinFunctions() {
  static const std::set<std::string> kNames = {
      "STR",       "LANG",      "LANGMATCHES", "DATATYPE",  "BOUND",
      "IRI",       "URI",       "BNODE",       "RAND",      "ABS",
      "CEIL",      "FLOOR",     "ROUND",       "CONCAT",    "STRLEN",
      "UCASE",     "LCASE",     "ENCODE_FOR_URI", "CONTAINS", "STRSTARTS",
      "STRENDS",   "STRBEFORE", "STRAFTER",    "YEAR",      "MONTH",
      "DAY",       "HOURS",     "MINUTES",     "SECONDS",   "TIMEZONE",
      "TZ",        "NOW",       "UUID",        "STRUUID",   "MD5",
      "SHA1",      "SHA256",    "SHA384",      "SHA512",    "COALESCE",
      "IF",        "STRLANG",   "STRDT",       "SAMETERM",  "ISIRI",
      "ISURI",     "ISBLANK",   "ISLITERAL",   "ISNUMERIC", "REGEX",
      "SUBSTR",    "REPLACE",   "COUNT",       "SUM",       "MIN",
      "MAX",       "AVG",       "SAMPLE",      "GROUP_CONCAT",
  };
  return kNames;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kEnd: return "end of query";
    case TokenKind::kIriRef: return "<" + token.text + ">";
    case TokenKind::kVariable: return "?" + token.text;
    case TokenKind::kString: return "string literal";
    case TokenKind::kLangTag: return "@" + token.text;
    default: return "'" + token.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParsedQuery Run() {
    ParsePrologue();
    ParseSelectQuery(PatternScope::kMain, /*top_level=*/true);
    if (Cur().kind != TokenKind::kEnd) Fail("unexpected " + Describe(Cur()) + " after query");
    return std::move(query_);
  }

 private:
  class NestingGuard {
   public:
    explicit NestingGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.Fail("query nested too deeply");
    }
    ~NestingGuard() { --p_.depth_; }

   private:
    Parser& p_;
  };

  const Token& Cur() const { return tokens_[pos_]; }
  const Token& Ahead(std::size_t n) const {
    return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
  }
  void Next() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  bool IsPunct(std::string_view p, std::size_t ahead = 0) const {
    const Token& t = Ahead(ahead);
    return t.kind == TokenKind::kPunct && t.text == p;
  }
  bool IsWord(std::string_view upper_keyword, std::size_t ahead = 0) const {
    const Token& t = Ahead(ahead);
    return t.kind == TokenKind::kWord && Upper(t.text) == upper_keyword;
  }
  bool AcceptPunct(std::string_view p) {
    if (!IsPunct(p)) return false;
    Next();
    return true;
  }
  bool AcceptWord(std::string_view kw) {
    if (!IsWord(kw)) return false;
    Next();
    return true;
  }
  void ExpectPunct(std::string_view p) {
    if (!AcceptPunct(p)) {
      Fail("expected '" + std::string(p) + "' but found " + Describe(Cur()));
    }
  }
  void ExpectWord(std::string_view kw) {
    if (!AcceptWord(kw)) {
      Fail("expected " + std::string(kw) + " but found " + Describe(Cur()));
    }
  }

  [[noreturn]] void Fail(std::string message) const {
    if (Cur().kind == TokenKind::kEnd && !open_groups_.empty()) {
      const SourcePosition& open = open_groups_.back();
      message += " (unclosed '{' opened at line " + std::to_string(open.line) +
                 ", column " + std::to_string(open.column) + ")";
    }
    throw ParseFailure{SyntaxError{Cur().position, std::move(message)}};
  }

  // --- prologue and query form -------------------------------------------

  void ParsePrologue() {
    while (true) {
      if (AcceptWord("BASE")) {
        if (Cur().kind != TokenKind::kIriRef) Fail("expected IRI after BASE");
        Next();
      } else if (AcceptWord("PREFIX")) {
        const Token& name = Cur();
        if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
            name.text.find(':') != name.text.size() - 1) {
          Fail("expected prefix name like 'wd:' after PREFIX");
        }
        std::string label = name.text.substr(0, name.text.size() - 1);
        Next();
        if (Cur().kind != TokenKind::kIriRef) Fail("expected IRI in PREFIX declaration");
        query_.declared_prefixes[label] = Cur().text;
        Next();
      } else {
        return;
      }
    }
  }

  void ParseSelectQuery(PatternScope scope, bool top_level) {
    if (IsWord("ASK") || IsWord("CONSTRUCT") || IsWord("DESCRIBE")) {
      Fail("only SELECT queries are supported");
    }
    ExpectWord("SELECT");
    bool distinct = false;
    if (AcceptWord("DISTINCT")) {
      distinct = true;
    } else {
      AcceptWord("REDUCED");
    }
    bool select_all = false;
    std::vector<std::string> projection;
    if (AcceptPunct("*")) {
      select_all = true;
    } else {
      while (true) {
        if (Cur().kind == TokenKind::kVariable) {
          projection.push_back(Cur().text);
          Next();
        } else if (IsPunct("(")) {
          NestingGuard guard(*this);
          Next();
          ParseExpression(scope);
          ExpectWord("AS");
          if (Cur().kind != TokenKind::kVariable) Fail("expected variable after AS");
          projection.push_back(Cur().text);
          Next();
          ExpectPunct(")");
        } else {
          break;
        }
      }
      if (projection.empty()) Fail("expected '*' or variables after SELECT");
    }
    if (top_level) {
      query_.distinct = distinct;
      query_.select_all = select_all;
      query_.projection = std::move(projection);
      while (AcceptWord("FROM")) {
        AcceptWord("NAMED");
        ParseIri();
      }
    }
    AcceptWord("WHERE");
    if (!IsPunct("{")) Fail("expected '{' to open the WHERE clause");
    ParseGroupGraphPattern(scope);
    ParseSolutionModifiers(scope, top_level);
    if (IsWord("VALUES")) {
      Next();
      ParseDataBlock();
    }
  }

  void ParseSolutionModifiers(PatternScope scope, bool top_level) {
    if (AcceptWord("GROUP")) {
      ExpectWord("BY");
      int count = 0;
      while (true) {
        if (Cur().kind == TokenKind::kVariable) {
          Next();
        } else if (IsPunct("(")) {
          NestingGuard guard(*this);
          Next();
          ParseExpression(scope);
          if (AcceptWord("AS")) {
            if (Cur().kind != TokenKind::kVariable) Fail("expected variable after AS");
            Next();
          }
          ExpectPunct(")");
        } else if (StartsFunctionCall()) {
          ParsePrimary(scope);
        } else {
          break;
        }
        ++count;
      }
      if (count == 0) Fail("expected grouping condition after GROUP BY");
    }
    if (AcceptWord("HAVING")) {
      int count = 0;
      while (IsPunct("(") || StartsFunctionCall()) {
        ParseConstraint(scope);
        ++count;
      }
      if (count == 0) Fail("expected constraint after HAVING");
    }
    if (AcceptWord("ORDER")) {
      ExpectWord("BY");
      int count = 0;
      while (true) {
        if (IsWord("ASC") || IsWord("DESC")) {
          Next();
          if (!IsPunct("(")) Fail("expected '(' after ASC/DESC");
          ParseBracketted(scope);
        } else if (Cur().kind == TokenKind::kVariable) {
          Next();
        } else if (IsPunct("(") || StartsFunctionCall()) {
          ParseConstraint(scope);
        } else {
          break;
        }
        ++count;
      }
      if (count == 0) Fail("expected ordering condition after ORDER BY");
    }
    bool seen_limit = false, seen_offset = false;
    while (true) {
      if (!seen_limit && IsWord("LIMIT")) {
        Next();
        long long n = ParseNonNegativeInteger("LIMIT");
        if (top_level) query_.limit = n;
        seen_limit = true;
      } else if (!seen_offset && IsWord("OFFSET")) {
        Next();
        long long n = ParseNonNegativeInteger("OFFSET");
        if (top_level) query_.offset = n;
        seen_offset = true;
      } else {
        break;
      }
    }
  }

  long long ParseNonNegativeInteger(std::string_view clause) {
    if (Cur().kind != TokenKind::kInteger) {
      Fail("expected integer after " + std::string(clause));
    }
    const std::string& digits = Cur().text;
    if (digits.size() > 18) Fail(std::string(clause) + " value out of range");
    long long n = std::stoll(digits);
    Next();
    return n;
  }

  // --- graph patterns ------------------------------------------------------

  static PatternScope Inner(PatternScope outer, PatternScope inner) {
    return outer == PatternScope::kMain ? inner : outer;
  }

  void ParseGroupGraphPattern(PatternScope scope) {
    NestingGuard guard(*this);
    SourcePosition open = Cur().position;
    ExpectPunct("{");
    open_groups_.push_back(open);
    if (IsWord("SELECT")) {
      ParseSelectQuery(Inner(scope, PatternScope::kSubSelect), false);
      ExpectPunct("}");
      open_groups_.pop_back();
      return;
    }
    bool triples_need_dot = false;
    while (!IsPunct("}")) {
      if (Cur().kind == TokenKind::kEnd) Fail("unclosed '{': expected '}'");
      if (StartsGraphPatternNotTriples()) {
        ParseGraphPatternNotTriples(scope);
        AcceptPunct(".");
        triples_need_dot = false;
        continue;
      }
      if (AcceptPunct(".")) {
        triples_need_dot = false;
        continue;
      }
      if (triples_need_dot) {
        Fail("expected '.' or '}' but found " + Describe(Cur()));
      }
      if (!StartsTerm()) {
        Fail("expected triple pattern or '}' but found " + Describe(Cur()));
      }
      ParseTriplesSameSubject(scope);
      triples_need_dot = true;
    }
    Next();
    open_groups_.pop_back();
  }

  bool StartsGraphPatternNotTriples() const {
    return IsPunct("{") || IsWord("OPTIONAL") || IsWord("MINUS") ||
           IsWord("GRAPH") || IsWord("SERVICE") || IsWord("FILTER") ||
           IsWord("BIND") || IsWord("VALUES");
  }

  void ParseGraphPatternNotTriples(PatternScope scope) {
    if (IsPunct("{")) {
      ParseGroupGraphPattern(scope);
      while (AcceptWord("UNION")) ParseGroupGraphPattern(scope);
    } else if (AcceptWord("OPTIONAL")) {
      ParseGroupGraphPattern(scope);
    } else if (AcceptWord("MINUS")) {
      ParseGroupGraphPattern(Inner(scope, PatternScope::kMinus));
    } else if (AcceptWord("GRAPH")) {
      ParseVarOrIri();
      ParseGroupGraphPattern(Inner(scope, PatternScope::kNamedGraph));
    } else if (AcceptWord("SERVICE")) {
      AcceptWord("SILENT");
      ParseVarOrIri();
      ParseGroupGraphPattern(Inner(scope, PatternScope::kService));
    } else if (AcceptWord("FILTER")) {
      ParseConstraint(scope);
    } else if (AcceptWord("BIND")) {
      NestingGuard guard(*this);
      ExpectPunct("(");
      ParseExpression(scope);
      ExpectWord("AS");
      if (Cur().kind != TokenKind::kVariable) Fail("expected variable after AS");
      Next();
      ExpectPunct(")");
    } else if (AcceptWord("VALUES")) {
      ParseDataBlock();
    }
  }

  void ParseVarOrIri() {
    if (Cur().kind == TokenKind::kVariable) {
      Next();
      return;
    }
    ParseIri();
  }

  void ParseDataBlock() {
    if (Cur().kind == TokenKind::kVariable) {
      Next();
      ExpectPunct("{");
      while (!IsPunct("}")) ParseDataValue();
      Next();
      return;
    }
    ExpectPunct("(");
    std::size_t width = 0;
    while (Cur().kind == TokenKind::kVariable) {
      Next();
      ++width;
    }
    ExpectPunct(")");
    ExpectPunct("{");
    while (!IsPunct("}")) {
      ExpectPunct("(");
      std::size_t n = 0;
      while (!IsPunct(")")) {
        ParseDataValue();
        ++n;
      }
      if (n != width) Fail("VALUES row has wrong number of values");
      Next();
    }
    Next();
  }

  void ParseDataValue() {
    if (AcceptWord("UNDEF")) return;
    if (Cur().kind == TokenKind::kEnd) Fail("unclosed VALUES block");
    Term t = ParseTermNode();
    if (t.is_variable()) Fail("variables are not allowed in VALUES data");
  }

  // --- triples -------------------------------------------------------------

  bool StartsTerm() const {
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kVariable:
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
      case TokenKind::kString:
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        return true;
      case TokenKind::kWord:
        return t.text == "true" || t.text == "false";
      case TokenKind::kPunct:
        return t.text == "[" || t.text == "(" ||
               ((t.text == "+" || t.text == "-") && IsNumberToken(Ahead(1)));
      default:
        return false;
    }
  }

  static bool IsNumberToken(const Token& t) {
    return t.kind == TokenKind::kInteger || t.kind == TokenKind::kDecimal ||
           t.kind == TokenKind::kDouble;
  }

  void ParseTriplesSameSubject(PatternScope scope) {
    Term subject = ParseTermNode();
    while (true) {
      Term predicate = ParseVerb(scope);
      while (true) {
        if (!StartsTerm()) Fail("expected object but found " + Describe(Cur()));
        Term object = ParseTermNode();
        query_.triples.push_back({{subject, predicate, std::move(object)}, scope});
        if (!AcceptPunct(",")) break;
      }
      if (!IsPunct(";")) return;
      while (AcceptPunct(";")) {
      }
      if (!StartsVerb()) return;
    }
  }

  bool StartsVerb() const {
    const Token& t = Cur();
    return t.kind == TokenKind::kVariable || t.kind == TokenKind::kIriRef ||
           t.kind == TokenKind::kPrefixedName ||
           (t.kind == TokenKind::kWord && t.text == "a") ||
           (t.kind == TokenKind::kPunct &&
            (t.text == "^" || t.text == "!" || t.text == "("));
  }

  Term ParseVerb(PatternScope scope) {
    if (Cur().kind == TokenKind::kVariable) {
      Term t = Term::Variable(Cur().text);
      Next();
      return t;
    }
    if (!StartsVerb()) Fail("expected predicate but found " + Describe(Cur()));
    std::string path_text;
    bool simple = true;
    std::optional<Term> single;
    ParsePathAlternative(scope, path_text, simple, single);
    if (simple && single) return *single;
    return Term::OtherIri(path_text);
  }

  void ParsePathAlternative(PatternScope scope, std::string& text,
                            bool& simple, std::optional<Term>& single) {
    ParsePathSequence(scope, text, simple, single);
    while (IsPunct("|")) {
      Next();
      text += "|";
      simple = false;
      ParsePathSequence(scope, text, simple, single);
    }
  }

  void ParsePathSequence(PatternScope scope, std::string& text, bool& simple,
                         std::optional<Term>& single) {
    ParsePathEltOrInverse(scope, text, simple, single);
    while (IsPunct("/")) {
      Next();
      text += "/";
      simple = false;
      ParsePathEltOrInverse(scope, text, simple, single);
    }
  }

  void ParsePathEltOrInverse(PatternScope scope, std::string& text,
                             bool& simple, std::optional<Term>& single) {
    if (AcceptPunct("^")) {
      text += "^";
      simple = false;
    }
    ParsePathPrimary(scope, text, simple, single);
    if (IsPunct("?") || IsPunct("*") || IsPunct("+")) {
      text += Cur().text;
      simple = false;
      Next();
    }
  }

  void ParsePathPrimary(PatternScope scope, std::string& text, bool& simple,
                        std::optional<Term>& single) {
    if (IsPunct("(")) {
      NestingGuard guard(*this);
      Next();
      text += "(";
      simple = false;
      ParsePathAlternative(scope, text, simple, single);
      ExpectPunct(")");
      text += ")";
      return;
    }
    if (AcceptPunct("!")) {
      text += "!";
      simple = false;
      if (AcceptPunct("(")) {
        text += "(";
        if (!IsPunct(")")) {
          ParseNegatedOne(text);
          while (AcceptPunct("|")) {
            text += "|";
            ParseNegatedOne(text);
          }
        }
        ExpectPunct(")");
        text += ")";
      } else {
        ParseNegatedOne(text);
      }
      return;
    }
    Term t = ParsePathIri();
    text += t.ToQueryText();
    single = t;
  }

  void ParseNegatedOne(std::string& text) {
    if (AcceptPunct("^")) text += "^";
    text += ParsePathIri().ToQueryText();
  }

  Term ParsePathIri() {
    if (Cur().kind == TokenKind::kWord && Cur().text == "a") {
      Next();
      return Term::OtherIri("a");
    }
    if (Cur().kind != TokenKind::kIriRef &&
        Cur().kind != TokenKind::kPrefixedName) {
      Fail("expected property but found " + Describe(Cur()));
    }
    return ParseIri();
  }

  // A subject/object position term (no blank nodes or collections).
  Term ParseTermNode() {
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kVariable: {
        Term term = Term::Variable(t.text);
        Next();
        return term;
      }
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
        return ParseIri();
      case TokenKind::kString:
        return ParseStringLiteral();
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        return ParseNumber("");
      case TokenKind::kWord:
        if (t.text == "true" || t.text == "false") {
          Term term = Term::Literal(t.text, std::string(kXsdNamespace) + "boolean");
          Next();
          return term;
        }
        break;
      case TokenKind::kPunct:
        if ((t.text == "+" || t.text == "-") && IsNumberToken(Ahead(1))) {
          std::string sign = t.text;
          Next();
          return ParseNumber(sign);
        }
        if (t.text == "[" || t.text == "(") {
          Fail("blank nodes and collections are not supported");
        }
        break;
      default:
        break;
    }
    Fail("expected term but found " + Describe(t));
  }

  Term ParseNumber(const std::string& sign) {
    const Token& t = Cur();
    std::string type = t.kind == TokenKind::kInteger   ? "integer"
                       : t.kind == TokenKind::kDecimal ? "decimal"
                                                       : "double";
    Term term = Term::Literal(sign + t.text, std::string(kXsdNamespace) + type);
    Next();
    return term;
  }

  Term ParseStringLiteral() {
    std::string lexical = Cur().text;
    Next();
    if (Cur().kind == TokenKind::kLangTag) {
      std::string lang = Cur().text;
      Next();
      return Term::Literal(std::move(lexical), {}, std::move(lang));
    }
    if (AcceptPunct("^^")) {
      if (Cur().kind != TokenKind::kIriRef &&
          Cur().kind != TokenKind::kPrefixedName) {
        Fail("expected datatype IRI after '^^'");
      }
      std::string datatype = ExpandIri();
      return Term::Literal(std::move(lexical), std::move(datatype));
    }
    return Term::Literal(std::move(lexical));
  }

  // Consumes an IRI token and returns its expanded form.
  std::string ExpandIri() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kIriRef) {
      std::string iri = t.text;
      Next();
      return iri;
    }
    auto [ns, local] = ResolvePrefixed(t);
    RecordId(ns, local, t);
    Next();
    return ns + local;
  }

  std::pair<std::string, std::string> ResolvePrefixed(const Token& t) const {
    auto colon = t.text.find(':');
    std::string label = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    if (label == "_") Fail("blank nodes are not supported");
    auto declared = query_.declared_prefixes.find(label);
    if (declared != query_.declared_prefixes.end()) {
      return {declared->second, local};
    }
    const PrefixMap& defaults = DefaultPrefixes();
    auto builtin = defaults.find(label);
    if (builtin == defaults.end()) {
      Fail("undeclared prefix '" + label + ":'");
    }
    return {builtin->second, local};
  }

  static std::optional<Term> Classify(const std::string& ns,
                                      const std::string& local,
                                      const std::string& label) {
    if (ns == kEntityNamespace && IsEntityIdText(local)) {
      return Term::Entity(local, label);
    }
    if ((ns == kDirectClaimNamespace || ns == kClaimNamespace ||
         ns == kStatementNamespace || ns == kQualifierNamespace) &&
        IsPropertyIdText(local)) {
      return Term::Property(local, label);
    }
    return std::nullopt;
  }

  void RecordId(const std::string& ns, const std::string& local,
                const Token& t) {
    std::string label = t.text.substr(0, t.text.find(':'));
    if (auto term = Classify(ns, local, label)) {
      query_.ids.push_back({*term, t.position});
    }
  }

  Term ParseIri() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kIriRef) {
      Term term = Term::OtherIri("<" + t.text + ">");
      Next();
      return term;
    }
    if (t.kind != TokenKind::kPrefixedName) {
      Fail("expected IRI but found " + Describe(t));
    }
    auto [ns, local] = ResolvePrefixed(t);
    std::string label = t.text.substr(0, t.text.find(':'));
    std::optional<Term> term = Classify(ns, local, label);
    if (term) query_.ids.push_back({*term, t.position});
    Term out = term ? *term : Term::OtherIri(t.text);
    Next();
    return out;
  }

  // --- expressions ---------------------------------------------------------

  bool StartsFunctionCall() const {
    const Token& t = Cur();
    if (t.kind == TokenKind::kWord) {
      if (IsWord("NOT") || IsWord("EXISTS")) return true;
      return BuiltinFunctions().count(Upper(t.text)) && IsPunct("(", 1);
    }
    return (t.kind == TokenKind::kIriRef ||
            t.kind == TokenKind::kPrefixedName) &&
           IsPunct("(", 1);
  }

  void ParseConstraint(PatternScope scope) {
    if (IsPunct("(")) {
      ParseBracketted(scope);
    } else if (StartsFunctionCall()) {
      ParsePrimary(scope);
    } else {
      Fail("expected '(' or function call but found " + Describe(Cur()));
    }
  }

  void ParseBracketted(PatternScope scope) {
    NestingGuard guard(*this);
    ExpectPunct("(");
    ParseExpression(scope);
    ExpectPunct(")");
  }

  void ParseExpression(PatternScope scope) {
    NestingGuard guard(*this);
    ParseAnd(scope);
    while (AcceptPunct("||")) ParseAnd(scope);
  }

  void ParseAnd(PatternScope scope) {
    ParseRelational(scope);
    while (AcceptPunct("&&")) ParseRelational(scope);
  }

  void ParseRelational(PatternScope scope) {
    ParseAdditive(scope);
    static constexpr std::string_view kOps[] = {"=", "!=", "<", ">", "<=", ">="};
    for (std::string_view op : kOps) {
      if (AcceptPunct(op)) {
        ParseAdditive(scope);
        return;
      }
    }
    bool negated = false;
    if (IsWord("NOT") && IsWord("IN", 1)) {
      Next();
      negated = true;
    }
    if (AcceptWord("IN")) {
      ExpectPunct("(");
      if (!IsPunct(")")) {
        ParseExpression(scope);
        while (AcceptPunct(",")) ParseExpression(scope);
      }
      ExpectPunct(")");
    } else if (negated) {
      Fail("expected IN after NOT");
    }
  }

  void ParseAdditive(PatternScope scope) {
    ParseMultiplicative(scope);
    while (IsPunct("+") || IsPunct("-")) {
      Next();
      ParseMultiplicative(scope);
    }
  }

  void ParseMultiplicative(PatternScope scope) {
    ParseUnary(scope);
    while (IsPunct("*") || IsPunct("/")) {
      Next();
      ParseUnary(scope);
    }
  }

  void ParseUnary(PatternScope scope) {
    NestingGuard guard(*this);
    if (IsPunct("!") || IsPunct("+") || IsPunct("-")) {
      Next();
      ParseUnary(scope);
      return;
    }
    ParsePrimary(scope);
  }

  void ParsePrimary(PatternScope scope) {
    const Token& t = Cur();
    if (IsPunct("(")) {
      ParseBracketted(scope);
      return;
    }
    switch (t.kind) {
      case TokenKind::kVariable:
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        Next();
        return;
      case TokenKind::kString:
        ParseStringLiteral();
        return;
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
        ParseIri();
        if (IsPunct("(")) ParseArgumentList(scope, false);
        return;
      case TokenKind::kWord:
        break;
      default:
        Fail("expected expression but found " + Describe(t));
    }
    if (t.text == "true" || t.text == "false") {
      Next();
      return;
    }
    if (AcceptWord("NOT")) {
      ExpectWord("EXISTS");
      ParseGroupGraphPattern(Inner(scope, PatternScope::kFilter));
      return;
    }
    if (AcceptWord("EXISTS")) {
      ParseGroupGraphPattern(Inner(scope, PatternScope::kFilter));
      return;
    }
    std::string name = Upper(t.text);
    if (!BuiltinFunctions().count(name)) {
      Fail("unknown function or keyword '" + t.text + "'");
    }
    Next();
    if (!IsPunct("(")) Fail("expected '(' after " + name);
    ParseArgumentList(scope, name == "COUNT" || name == "GROUP_CONCAT" ||
                                 name == "SUM" || name == "MIN" ||
                                 name == "MAX" || name == "AVG" ||
                                 name == "SAMPLE");
  }

  void ParseArgumentList(PatternScope scope, bool aggregate) {
    NestingGuard guard(*this);
    ExpectPunct("(");
    if (AcceptPunct(")")) return;
    if (aggregate) AcceptWord("DISTINCT");
    if (aggregate && AcceptPunct("*")) {
      ExpectPunct(")");
      return;
    }
    ParseExpression(scope);
    while (AcceptPunct(",")) ParseExpression(scope);
    if (aggregate && AcceptPunct(";")) {
      ExpectWord("SEPARATOR");
      ExpectPunct("=");
      if (Cur().kind != TokenKind::kString) Fail("expected string after SEPARATOR =");
      Next();
    }
    ExpectPunct(")");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<SourcePosition> open_groups_;
  ParsedQuery query_;
};

}  // namespace

ParseOutcome Parse(std::string_view text) {
  ParseOutcome outcome;
  try {
    outcome.query = Parser(Tokenize(text)).Run();
  } catch (const ParseFailure& failure) {
    outcome.error = failure.error;
  }
  return outcome;
}

}  // namespace linkq::sparql
