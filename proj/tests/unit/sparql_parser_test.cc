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

#include <gtest/gtest.h>

#include "linkq/sparql/lexer.h"
#include "support/test_data.h"

namespace linkq::sparql {
namespace {

using ::linkq::testing::ExampleQuery;
using ::linkq::testing::ExampleQueryNames;

ParsedQuery MustParse(std::string_view text) {
  ParseOutcome outcome = Parse(text);
  EXPECT_TRUE(outcome.ok()) << (outcome.error ? outcome.error->message : "");
  return outcome.ok() ? *outcome.query : ParsedQuery{};
}

SyntaxError MustFail(std::string_view text) {
  ParseOutcome outcome = Parse(text);
  EXPECT_FALSE(outcome.ok()) << "accepted: " << text;
  return outcome.error.value_or(SyntaxError{});
}

TEST(LexerTest, TrailingDotIsNotPartOfPrefixedName) {
  auto tokens = Tokenize("wd:Q312 wdt:P112 ?founder.");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].text, "wd:Q312");
  EXPECT_EQ(tokens[2].kind, TokenKind::kVariable);
  EXPECT_EQ(tokens[2].text, "founder");
  EXPECT_EQ(tokens[3].text, ".");

  tokens = Tokenize("?s wdt:P31 wd:Q5.");
  EXPECT_EQ(tokens[2].text, "wd:Q5");
  EXPECT_EQ(tokens[3].text, ".");
}

TEST(LexerTest, CommentsAndStrings) {
  auto tokens = Tokenize("# a comment with wd:Q1\n\"x # not a comment\" 'y'");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kString);
  EXPECT_EQ(tokens[0].text, "x # not a comment");
  EXPECT_EQ(tokens[0].position.line, 2);
  EXPECT_EQ(tokens[1].text, "y");
}

TEST(LexerTest, StringEscapesAndLongStrings) {
  auto tokens = Tokenize(R"("a\"b\né" """multi
line""")");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].text, "a\"b\n\xc3\xa9");
  EXPECT_EQ(tokens[1].text, "multi\nline");
}

TEST(LexerTest, LessThanVersusIri) {
  auto tokens = Tokenize("?a < ?b <http://x.org/y> ?c <= 3");
  EXPECT_EQ(tokens[1].kind, TokenKind::kPunct);
  EXPECT_EQ(tokens[3].kind, TokenKind::kIriRef);
  EXPECT_EQ(tokens[3].text, "http://x.org/y");
  EXPECT_EQ(tokens[5].text, "<=");
}

TEST(LexerTest, Numbers) {
  auto tokens = Tokenize("8000 8848.86 1e3 .5 7.");
  EXPECT_EQ(tokens[0].kind, TokenKind::kInteger);
  EXPECT_EQ(tokens[1].kind, TokenKind::kDecimal);
  EXPECT_EQ(tokens[2].kind, TokenKind::kDouble);
  EXPECT_EQ(tokens[3].kind, TokenKind::kDecimal);
  EXPECT_EQ(tokens[4].kind, TokenKind::kInteger);
  EXPECT_EQ(tokens[5].text, ".");
}

TEST(ParserTest, AcceptsAllExampleQueries) {
  for (const std::string& name : ExampleQueryNames()) {
    ParseOutcome outcome = Parse(ExampleQuery(name));
    EXPECT_TRUE(outcome.ok()) << name << ": "
                              << (outcome.error ? outcome.error->message : "");
  }
}

TEST(ParserTest, ProjectionAndModifiers) {
  ParsedQuery q = MustParse(ExampleQuery("mountains"));
  EXPECT_EQ(q.projection,
            (std::vector<std::string>{"mountain", "mountainLabel", "height"}));
  EXPECT_EQ(q.limit, 5);
  EXPECT_FALSE(q.distinct);

  q = MustParse(ExampleQuery("beethoven"));
  EXPECT_EQ(q.projection,
            (std::vector<std::string>{"composition", "compositionLabel"}));
}

TEST(ParserTest, ScopesOfHeadsOfStateQuery) {
  ParsedQuery q = MustParse(ExampleQuery("heads_of_state"));
  // 4 in the main group, 1 in FILTER NOT EXISTS, 1 in SERVICE.
  ASSERT_EQ(q.triples.size(), 6u);
  int main = 0, filter = 0, service = 0;
  for (const auto& t : q.triples) {
    main += t.scope == PatternScope::kMain;
    filter += t.scope == PatternScope::kFilter;
    service += t.scope == PatternScope::kService;
  }
  EXPECT_EQ(main, 4);
  EXPECT_EQ(filter, 1);
  EXPECT_EQ(service, 1);
}

TEST(ParserTest, BroaderGrammar) {
  const char* accepted[] = {
      "SELECT * WHERE { ?s ?p ?o }",
      "SELECT DISTINCT ?x WHERE { ?x wdt:P31/wdt:P279* wd:Q5 . }",
      "SELECT ?x WHERE { ?x a wd:Q5 ; ^wdt:P50 ?book . }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 OPTIONAL { ?x wdt:P569 ?b } }",
      "SELECT ?x WHERE { { ?x wdt:P31 wd:Q5 } UNION { ?x wdt:P31 wd:Q6 } }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 MINUS { ?x wdt:P570 ?d } }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 . BIND(YEAR(?d) AS ?y) }",
      "SELECT ?x WHERE { VALUES ?x { wd:Q1 wd:Q2 } ?x rdfs:label ?l }",
      "SELECT ?x WHERE { VALUES (?x ?y) { (wd:Q1 1) (UNDEF \"a\") } }",
      "SELECT (COUNT(DISTINCT ?x) AS ?n) WHERE { ?x wdt:P31 wd:Q5 }",
      "SELECT (COUNT(*) AS ?n) WHERE { ?x wdt:P31 wd:Q5 }",
      "SELECT ?c (GROUP_CONCAT(?l; SEPARATOR=\", \") AS ?ls) WHERE { ?c "
      "rdfs:label ?l } GROUP BY ?c HAVING (COUNT(?l) > 1)",
      "SELECT ?x WHERE { ?x wdt:P2044 ?h FILTER(?h > 8000 && ?h < 9000) } "
      "ORDER BY DESC(?h) ?x LIMIT 10 OFFSET 5",
      "SELECT ?x WHERE { ?x rdfs:label \"Paris\"@fr }",
      "SELECT ?x WHERE { ?x wdt:P1082 \"100\"^^xsd:integer }",
      "SELECT ?x WHERE { ?x wdt:P1082 -5 }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 FILTER(LANG(?x) IN (\"en\", \"de\")) }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 FILTER(?x NOT IN (wd:Q1)) }",
      "SELECT ?x WHERE { { SELECT ?x WHERE { ?x wdt:P31 wd:Q5 } LIMIT 3 } }",
      "PREFIX ex: <http://example.org/> SELECT ?x WHERE { ?x ex:p ex:o }",
      "BASE <http://example.org/> SELECT ?x FROM <http://g> WHERE { ?x <p> ?y }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 FILTER EXISTS { ?x wdt:P19 ?p } }",
      "SELECT ?x WHERE { ?x wdt:P31 wd:Q5 FILTER REGEX(?x, \"^a\", \"i\") }",
      "SELECT ?x WHERE { GRAPH ?g { ?x ?p ?o } }",
      "SELECT ?x WHERE { ?x !(wdt:P31|wdt:P279) ?y }",
      "SELECT ?x WHERE { ?x wdt:P31 ?t, ?u; wdt:P17 ?c; }",
      "select ?x where { ?x wdt:P31 wd:Q5 } order by asc(?x)",
  };
  for (const char* q : accepted) MustParse(q);
}

TEST(ParserTest, PathPredicateKeepsQueryText) {
  ParsedQuery q = MustParse("SELECT ?x WHERE { ?x wdt:P31/wdt:P279* wd:Q5 }");
  ASSERT_EQ(q.triples.size(), 1u);
  EXPECT_EQ(q.triples[0].triple.predicate, Term::OtherIri("wdt:P31/wdt:P279*"));
  // Ids inside the path are still inventoried.
  ASSERT_EQ(q.ids.size(), 3u);
  EXPECT_EQ(q.ids[0].term.value, "P31");
  EXPECT_EQ(q.ids[1].term.value, "P279");
}

TEST(ParserTest, DeclaredPrefixOverridesDefault) {
  ParsedQuery q =
      MustParse("PREFIX wd: <http://example.org/> SELECT ?x WHERE { ?x ?p wd:Q5 }");
  EXPECT_EQ(q.triples[0].triple.object, Term::OtherIri("wd:Q5"));
  EXPECT_TRUE(q.ids.empty());

  q = MustParse(
      "PREFIX item: <http://www.wikidata.org/entity/> "
      "SELECT ?x WHERE { ?x ?p item:Q5 }");
  EXPECT_EQ(q.triples[0].triple.object, Term::Entity("Q5", "item"));
}

TEST(ParserTest, LiteralTerms) {
  ParsedQuery q = MustParse(
      "SELECT ?x WHERE { ?x ?p 8000, \"a\"@en, \"5\"^^xsd:integer, true }");
  ASSERT_EQ(q.triples.size(), 4u);
  const std::string xsd = kXsdNamespace;
  EXPECT_EQ(q.triples[0].triple.object, Term::Literal("8000", xsd + "integer"));
  EXPECT_EQ(q.triples[1].triple.object, Term::Literal("a", "", "en"));
  EXPECT_EQ(q.triples[2].triple.object, Term::Literal("5", xsd + "integer"));
  EXPECT_EQ(q.triples[3].triple.object, Term::Literal("true", xsd + "boolean"));
}

TEST(ParserTest, TruncatedQueryReportsUnclosedGroup) {
  const std::string text = "SELECT ?x WHERE { ?x wdt:P31 ";
  SyntaxError error = MustFail(text);
  EXPECT_EQ(error.position.offset, text.size());
  EXPECT_EQ(error.position.line, 1);
  EXPECT_NE(error.message.find("unclosed '{'"), std::string::npos)
      << error.message;
}

TEST(ParserTest, RejectsWithPositions) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  const Case cases[] = {
      {"", 0},
      {"ASK { ?x ?p ?o }", 0},
      {"SELECT WHERE { ?x ?p ?o }", 7},
      {"SELECT ?x WHERE { ?x ?p }", 24},
      {"SELECT ?x WHERE { ?x foo:bar ?o }", 21},
      {"SELECT ?x WHERE { ?x ?p ?o } LIMIT x", 35},
      {"SELECT ?x WHERE { ?x ?p ?o ?q ?r ?s }", 27},
      {"SELECT ?x WHERE { ?x ?p \"unterminated }", 24},
      {"SELECT ?x WHERE { ?x ?p ?o FILTER(FOO(?x)) }", 34},
      {"SELECT ?x WHERE { ?x ?p [] }", 24},
      {"SELECT ?x WHERE { ?x ?p _:b }", 24},
      {"SELECT ?x WHERE { ?x ?p ?o } }", 29},
      {"SELECT ?x\nWHERE {\n  ?x ?p ?o ~ }", 29},
  };
  for (const Case& c : cases) {
    SyntaxError error = MustFail(c.text);
    EXPECT_EQ(error.position.offset, c.offset) << c.text << " -> " << error.message;
    EXPECT_FALSE(error.message.empty());
  }
  SyntaxError error = MustFail("SELECT ?x\nWHERE {\n  ?x ?p ?o ~ }");
  EXPECT_EQ(error.position.line, 3);
  EXPECT_EQ(error.position.column, 12);
}

TEST(ParserTest, DeepNestingIsAnErrorNotACrash) {
  std::string text = "SELECT ?x WHERE { FILTER(";
  text += std::string(100000, '(');
  SyntaxError error = MustFail(text);
  EXPECT_NE(error.message.find("nested too deeply"), std::string::npos);

  std::string groups = "SELECT ?x WHERE ";
  groups += std::string(5000, '{');
  MustFail(groups);
}

}  // namespace
}  // namespace linkq::sparql
