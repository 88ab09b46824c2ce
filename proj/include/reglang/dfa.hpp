#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "reglang/alphabet.hpp"
#include "reglang/regex.hpp"

namespace reglang {

/// Default cap on automaton sizes produced by subset and product constructions.
inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

/// Complete deterministic automaton. The transition table is total, so a
/// trash state is materialized whenever some move would otherwise be missing.
class Dfa {
 public:
  using State = std::uint32_t;

  /// `delta` is row-major: delta[q * |alphabet| + a]. Throws Error when the
  /// table is not total or refers to missing states, or when the alphabet
  /// is empty.
  Dfa(Alphabet alphabet, std::size_t state_count, State initial, std::vector<State> delta,
      std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  State next(State q, std::size_t symbol) const { return delta_[q * alphabet_.size() + symbol]; }
  const std::vector<State>& table() const noexcept { return delta_; }

  /// Words with symbols outside the alphabet are rejected.
  bool accepts(std::string_view word) const;

 private:
  Alphabet alphabet_;
  State initial_;
  std::vector<State> delta_;
  std::vector<bool> accepting_;
};

/// Subset construction. States are numbered in breadth-first order from the
/// initial state. Throws LimitError above `max_states`.
Dfa determinize(const Nfa& nfa, std::size_t max_states = kDefaultMaxStates);

/// Hopcroft partition refinement after dropping unreachable states. The result
/// is the unique minimal complete automaton, numbered breadth-first.
Dfa minimize(const Dfa& dfa);

/// parse, compile, determinize and minimize in one step.
Dfa dfa_from_regex(std::string_view text, const Alphabet& alphabet,
                   std::size_t max_states = kDefaultMaxStates);

/// Same automaton over a larger alphabet; new symbols lead to a fresh trash state.
Dfa extend_alphabet(const Dfa& dfa, const Alphabet& superset);

/// Brings both automata to the union alphabet. Inputs already sharing an
/// alphabet come back unchanged.
std::pair<Dfa, Dfa> harmonize(const Dfa& d1, const Dfa& d2);

enum class SetOp { Intersect, Union, SymDiff, Minus };

/// Reachable part of the product automaton. Alphabets must be equal
/// (AlphabetError otherwise).
Dfa combine(const Dfa& d1, const Dfa& d2, SetOp op, std::size_t max_states = kDefaultMaxStates);

Dfa complement(const Dfa& dfa);

/// {alphabet:[...], states:N, initial:i, accepting:[...], delta:[[...]...]}
nlohmann::json to_json(const Dfa& dfa);
Dfa dfa_from_json(const nlohmann::json& j);

}  // namespace reglang
