#include "doctest.h"

#include "fixtures.hpp"
#include "reglang/error.hpp"
#include "reglang/oracle.hpp"
#include "reglang/regex.hpp"

using namespace reglang;
using K = RegexAst::Kind;

TEST_CASE("parse: star of alternation") {
  auto ast = parse_regex("(a|b)*");
  CHECK(ast == RegexAst::star(RegexAst::alt({RegexAst::literal('a'), RegexAst::literal('b')})));
}

TEST_CASE("parse: repeat is kept unexpanded") {
  auto ast = parse_regex("((a|b){2})*");
  REQUIRE(ast.kind == K::Star);
  const auto& rep = ast.children.front();
  REQUIRE(rep.kind == K::Repeat);
  CHECK(rep.count == 2);
  CHECK(rep.children.front().kind == K::Alt);
}

TEST_CASE("parse: reserved tokens") {
  CHECK(parse_regex("~").kind == K::Epsilon);
  CHECK(parse_regex("#").kind == K::Empty);
  auto escaped = parse_regex("\\*a");
  REQUIRE(escaped.kind == K::Concat);
  CHECK(escaped.children[0] == RegexAst::literal('*'));
}

TEST_CASE("parse: precedence star > concat > alt") {
  auto ast = parse_regex("ab*|c");
  REQUIRE(ast.kind == K::Alt);
  REQUIRE(ast.children[0].kind == K::Concat);
  CHECK(ast.children[0].children[1].kind == K::Star);
  CHECK(ast.children[1] == RegexAst::literal('c'));
}

TEST_CASE("parse: syntax errors carry a position") {
  for (const char* bad : {"", "(a", "a)", "a|", "*a", "()", "a{", "a{x}", "a\\"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_regex(bad), SyntaxError);
  }
  try {
    parse_regex("ab)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("parse: literal outside the declared alphabet") {
  CHECK_THROWS_AS(parse_regex("abc", Alphabet("ab")), AlphabetError);
  CHECK_NOTHROW(parse_regex("abc", Alphabet("abcd")));
}

TEST_CASE("parse: repeat count is capped") {
  CHECK_THROWS_AS(parse_regex("a{100001}"), SyntaxError);
}

TEST_CASE("literals_of infers the alphabet") {
  CHECK(literals_of(parse_regex("(a|c)*b")).symbols() == "abc");
  CHECK(literals_of(parse_regex("~")).empty());
}

TEST_CASE("to_string round-trips the corpus") {
  for (const auto& l : fixtures::corpus()) {
    CAPTURE(l.regex);
    auto ast = parse_regex(l.regex);
    CHECK(parse_regex(to_string(ast)) == ast);
  }
}

TEST_CASE("nfa: epsilon and star") {
  Nfa eps = compile_to_nfa(parse_regex("~"), Alphabet("a"));
  CHECK(eps.accepts(""));
  CHECK_FALSE(eps.accepts("a"));
  Nfa star = compile_to_nfa(parse_regex("a*"), Alphabet("a"));
  CHECK(star.accepts(""));
  CHECK(star.accepts("a"));
  CHECK(star.accepts("aa"));
  CHECK_FALSE(compile_to_nfa(parse_regex("#"), Alphabet("a")).accepts(""));
}

TEST_CASE("nfa: repeat zero is epsilon") {
  Nfa nfa = compile_to_nfa(parse_regex("a{0}"), Alphabet("a"));
  CHECK(nfa.accepts(""));
  CHECK_FALSE(nfa.accepts("a"));
}

TEST_CASE("nfa: even-length words over {a,b}") {
  Nfa nfa = compile_to_nfa(parse_regex("((a|b){2})*"), Alphabet("ab"));
  for (const auto& w : oracle::enumerate_words(Alphabet("ab"), 8)) {
    CAPTURE(w);
    CHECK(nfa.accepts(w) == (w.size() % 2 == 0));
  }
}

TEST_CASE("nfa membership agrees with the syntax-tree matcher on the corpus") {
  const auto words = oracle::enumerate_words(Alphabet("abcd"), 6);
  for (const auto& l : fixtures::corpus()) {
    CAPTURE(l.regex);
    auto ast = parse_regex(l.regex);
    Nfa nfa = compile_to_nfa(ast, Alphabet("abcd"));
    std::size_t mismatches = 0;
    for (const auto& w : words) mismatches += nfa.accepts(w) != oracle::ast_matches(ast, w);
    CHECK(mismatches == 0);
  }
}
