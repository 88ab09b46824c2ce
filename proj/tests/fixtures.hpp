#pragma once

#include <string>
#include <vector>

#include "reglang/dfa.hpp"
#include "reglang/regex.hpp"

namespace fixtures {

struct Language {
  std::string regex;
  std::string alphabet;
};

// Alphabets of size 1 to 4, all drawn from {a,b,c,d}. Nothing grows faster
// than quadratically among the zero-entropy languages.
inline const std::vector<Language>& corpus() {
  static const std::vector<Language> languages{
      {"a*", "a"},
      {"(aa)*", "a"},
      {"a(aa)*", "a"},
      {"a|aa|aaa", "a"},
      {"~", "a"},
      {"b*", "b"},
      {"(a|b)*", "ab"},
      {"((a|b){2})*", "ab"},
      {"(a|b)*a(a|b)*", "ab"},
      {"a*b*", "ab"},
      {"(ab)*", "ab"},
      {"(a|b)*abb", "ab"},
      {"b(a|b)*", "ab"},
      {"a(a|b)*", "ab"},
      {"ab*", "ab"},
      {"(a|ba)*", "ab"},
      {"(a|b){3}", "ab"},
      {"#", "ab"},
      {"a*ba*", "ab"},
      {"(ab|ba)*", "ab"},
      {"(a|b|c)*", "abc"},
      {"(a|b|c)*c", "abc"},
      {"(a|bc)*", "abc"},
      {"(abc)*", "abc"},
      {"(a|b)*c(a|b)*", "abc"},
      {"(a|b|c|d)*", "abcd"},
      {"(aa|bb)*(c|d)", "abcd"},
      {"((a|b)(c|d))*", "abcd"},
  };
  return languages;
}

inline reglang::Dfa dfa(const Language& l) {
  return reglang::dfa_from_regex(l.regex, reglang::Alphabet(l.alphabet));
}

inline reglang::Dfa dfa(const std::string& regex, const std::string& alphabet) {
  return reglang::dfa_from_regex(regex, reglang::Alphabet(alphabet));
}

inline std::vector<reglang::Dfa> corpus_dfas() {
  std::vector<reglang::Dfa> out;
  for (const auto& l : corpus()) out.push_back(dfa(l));
  return out;
}

// The pair whose J_C is 0 although its J'-based average is 1/2.
inline const Language kExampleFirst{"((a|b|c){2})*|(d|e)*", "abcdefg"};
inline const Language kExampleSecond{"((a|b|c){2})*|(f|g)*", "abcdefg"};

// The 5-state automaton behind the worked example over {a,...,g}, with an
// explicit trash state 5: 0 -abc-> 1 -abc-> 2 -abc-> 1, 0 -de-> 3 -de-> 3,
// 0 -fg-> 4 -fg-> 4. Accepting {3,4} gives the symmetric difference and
// {2,3,4} the union without the empty word.
inline reglang::Dfa example_dfa(const std::vector<bool>& accepting) {
  using S = reglang::Dfa::State;
  const reglang::Alphabet sigma("abcdefg");
  std::vector<S> delta(6 * 7, 5);
  auto set = [&](S from, const char* symbols, S to) {
    for (const char* c = symbols; *c; ++c) delta[from * 7 + *sigma.index_of(*c)] = to;
  };
  set(0, "abc", 1);
  set(0, "de", 3);
  set(0, "fg", 4);
  set(1, "abc", 2);
  set(2, "abc", 1);
  set(3, "de", 3);
  set(4, "fg", 4);
  std::vector<bool> acc = accepting;
  acc.resize(6, false);
  return reglang::Dfa(sigma, 6, 0, std::move(delta), std::move(acc));
}

}  // namespace fixtures
