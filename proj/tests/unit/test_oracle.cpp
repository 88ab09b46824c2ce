#include "doctest.h"

#include "fixtures.hpp"
#include "reglang/error.hpp"
#include "reglang/oracle.hpp"

using namespace reglang;
using namespace reglang::oracle;

TEST_CASE("oracle counts") {
  auto all = oracle_counts(fixtures::dfa("(a|b)*", "ab"), 3);
  CHECK(all[3].exact == 8);
  auto even = oracle_counts(membership_of(parse_regex("(aa)*")), Alphabet("a"), 6);
  CHECK(even[6].cumulative == 4);
  CHECK(even[5].exact == 0);
}

TEST_CASE("oracle distances") {
  auto all = membership_of(parse_regex("(a|b)*"));
  auto even = membership_of(parse_regex("((a|b){2})*"));
  CHECK(oracle_distance(false, all, even, Alphabet("ab"), 3) == Rational(2, 3));
  CHECK(oracle_distance(true, all, even, Alphabet("ab"), 2) == 0);
  CHECK(oracle_distance(false, all, all, Alphabet("ab"), 5) == 0);
}

TEST_CASE("ast matcher basics") {
  auto ast = parse_regex("(a|b)*abb");
  CHECK(ast_matches(ast, "abb"));
  CHECK(ast_matches(ast, "babb"));
  CHECK_FALSE(ast_matches(ast, "ab"));
  CHECK(ast_matches(parse_regex("~"), ""));
  CHECK_FALSE(ast_matches(parse_regex("#"), ""));
  CHECK(ast_matches(parse_regex("(a*)*"), "aaa"));
  CHECK(ast_matches(parse_regex("(a|~){3}b"), "aab"));
  CHECK_FALSE(ast_matches(parse_regex("a{0}"), "a"));
  CHECK_THROWS_AS(ast_matches(parse_regex("a*"), std::string(64, 'a')), LimitError);
}

TEST_CASE("enumeration order and budget") {
  auto words = enumerate_words(Alphabet("ab"), 2);
  CHECK(words == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK_THROWS_AS(enumerate_words(Alphabet("ab"), 9), LimitError);
  CHECK_THROWS_AS(enumerate_words(Alphabet("abcdefgh"), 2), LimitError);
  OracleBudget big{20, 7};
  CHECK_THROWS_AS(big.check(Alphabet("abcdefg"), 11), LimitError);
  CHECK_NOTHROW(big.check(Alphabet("ab"), 20));
}

TEST_CASE("worked example first language: counts match the matrix engine to length 7") {
  Dfa d = fixtures::dfa(fixtures::kExampleFirst);
  auto rows = oracle_counts(membership_of(parse_regex(fixtures::kExampleFirst.regex)), Alphabet("abcdefg"), 7);
  CountStream s(count_vectors(trim(d)));
  for (const auto& row : rows) {
    CHECK(row.exact == s.exact());
    CHECK(row.cumulative == s.cumulative());
    s.advance();
  }
}

TEST_CASE("brute-force period and primitivity") {
  CHECK(brute_period({{0, 2}, {2, 0}}) == 2);
  CHECK(brute_period({{1}}) == 1);
  CHECK(brute_period({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 3);
  CHECK(brute_period({{0, 1}, {0, 0}}) == 0);
  CHECK_FALSE(brute_primitive({{0, 2}, {2, 0}}));
  CHECK(brute_primitive({{1, 1}, {1, 0}}));
}
