#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reglang/alphabet.hpp"

namespace reglang {

/// Syntax tree of a regular expression.
///
/// Concat and Alt are n-ary. Repeat keeps the `{n}` count unexpanded; it is
/// expanded by concatenation when the tree is compiled.
struct RegexAst {
  enum class Kind { Empty, Epsilon, Literal, Concat, Alt, Star, Repeat };

  Kind kind = Kind::Empty;
  char symbol = '\0';        // Literal only
  std::size_t count = 0;     // Repeat only
  std::vector<RegexAst> children;

  static RegexAst empty() { return {}; }
  static RegexAst epsilon() { return {Kind::Epsilon, '\0', 0, {}}; }
  static RegexAst literal(char c) { return {Kind::Literal, c, 0, {}}; }
  static RegexAst concat(std::vector<RegexAst> parts) {
    return {Kind::Concat, '\0', 0, std::move(parts)};
  }
  static RegexAst alt(std::vector<RegexAst> options) {
    return {Kind::Alt, '\0', 0, std::move(options)};
  }
  static RegexAst star(RegexAst inner) { return {Kind::Star, '\0', 0, {std::move(inner)}}; }
  static RegexAst repeat(RegexAst inner, std::size_t n) {
    return {Kind::Repeat, '\0', n, {std::move(inner)}};
  }

  friend bool operator==(const RegexAst&, const RegexAst&) = default;
};

/// Largest accepted `{n}` count. Expansion is linear in n.
inline constexpr std::size_t kMaxRepeatCount = 100000;

/// Parses `text` with precedence star/repeat > concatenation > alternation.
/// `~` is the empty word, `#` the empty language, `\` escapes a reserved
/// character. Throws SyntaxError, or AlphabetError when a literal lies
/// outside `alphabet`.
RegexAst parse_regex(std::string_view text,
                     const std::optional<Alphabet>& alphabet = std::nullopt);

/// Set of literal symbols occurring in the tree.
Alphabet literals_of(const RegexAst& ast);

/// Canonical text form; parse_regex(to_string(ast)) == ast.
std::string to_string(const RegexAst& ast);

/// Nondeterministic automaton with epsilon moves and a single accept state.
struct Nfa {
  using State = std::uint32_t;
  struct Edge {
    std::size_t symbol;  // index into alphabet
    State target;
  };

  Alphabet alphabet;
  State start = 0;
  State accept = 0;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<State>> epsilon;

  std::size_t state_count() const noexcept { return edges.size(); }

  /// Epsilon closure, sorted ascending.
  std::vector<State> closure(std::vector<State> seeds) const;
  bool accepts(std::string_view word) const;
};

/// Thompson construction over `alphabet`, which must contain every literal.
/// Repeat nodes are expanded by concatenation.
Nfa compile_to_nfa(const RegexAst& ast, const Alphabet& alphabet);

}  // namespace reglang
