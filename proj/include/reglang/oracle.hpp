#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "reglang/counting.hpp"
#include "reglang/dfa.hpp"
#include "reglang/regex.hpp"

// Brute-force ground truth. Nothing here touches the automata pipeline except
// the explicit Dfa overloads, which only simulate a given table.
namespace reglang::oracle {

struct OracleBudget {
  std::size_t n_max = 8;
  std::size_t max_alphabet = 7;

  /// Throws LimitError unless |alphabet| <= max_alphabet, n <= n_max and
  /// |alphabet|^(n+1) < 10^9.
  void check(const Alphabet& alphabet, std::size_t n) const;
};

using Membership = std::function<bool(std::string_view)>;

/// Direct matcher over the syntax tree: tracks the set of word positions
/// reachable after each subexpression. Words of length <= 63.
bool ast_matches(const RegexAst& ast, std::string_view word);

Membership membership_of(const RegexAst& ast);
Membership membership_of(const Dfa& dfa);

/// All words of length <= n in length-lexicographic order.
std::vector<std::string> enumerate_words(const Alphabet& alphabet, std::size_t n,
                                         const OracleBudget& budget = {});

struct CountRow {
  std::size_t n = 0;
  BigInt exact;
  BigInt cumulative;
};

std::vector<CountRow> oracle_counts(const Membership& in, const Alphabet& alphabet, std::size_t n_max,
                                    const OracleBudget& budget = {});
std::vector<CountRow> oracle_counts(const Dfa& dfa, std::size_t n_max, const OracleBudget& budget = {});

/// J'_n (exact_length) or J_n by enumeration, as an exact rational.
Rational oracle_distance(bool exact_length, const Membership& l1, const Membership& l2,
                         const Alphabet& alphabet, std::size_t n, const OracleBudget& budget = {});

/// Membership bits over a fixed word list, for reuse across many pairs.
std::vector<bool> membership_table(const Membership& in, const std::vector<std::string>& words);

/// J'_n or J_n from two membership tables over the same enumerate_words list.
Rational table_distance(bool exact_length, const std::vector<bool>& l1, const std::vector<bool>& l2,
                        const std::vector<std::string>& words, std::size_t n);

/// Square matrix of small path counts, row-major vector of rows.
using CountMatrix = std::vector<std::vector<std::uint64_t>>;

/// gcd of all L <= 2|V| with trace(A^L) > 0, for a strongly connected A; 0
/// when A has no closed walk.
std::size_t brute_period(const CountMatrix& a);

/// Some power A^k with k <= (|V|-1)^2 + 1 is entrywise positive.
bool brute_primitive(const CountMatrix& a);

}  // namespace reglang::oracle
