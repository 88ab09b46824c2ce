#include "reglang/oracle.hpp"

#include <numeric>

#include "reglang/error.hpp"

namespace reglang::oracle {
namespace {

using Positions = std::uint64_t;

Positions step(const RegexAst& ast, std::string_view w, Positions from) {
  using K = RegexAst::Kind;
  switch (ast.kind) {
    case K::Empty:
      return 0;
    case K::Epsilon:
      return from;
    case K::Literal: {
      Positions out = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if ((from >> i & 1) && w[i] == ast.symbol) out |= Positions{1} << (i + 1);
      return out;
    }
    case K::Concat:
      for (const auto& c : ast.children) from = step(c, w, from);
      return from;
    case K::Alt: {
      Positions out = 0;
      for (const auto& c : ast.children) out |= step(c, w, from);
      return out;
    }
    case K::Star: {
      Positions seen = from;
      Positions frontier = from;
      while (frontier) {
        Positions next = step(ast.children.front(), w, frontier) & ~seen;
        seen |= next;
        frontier = next;
      }
      return seen;
    }
    case K::Repeat:
      for (std::size_t i = 0; i < ast.count && from; ++i) from = step(ast.children.front(), w, from);
      return from;
  }
  return 0;
}

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
  const std::size_t n = a.size();
  CountMatrix c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Only the zero pattern matters; keeps entries from overflowing.
CountMatrix pattern(CountMatrix m) {
  for (auto& row : m)
    for (auto& x : row) x = x ? 1 : 0;
  return m;
}

}  // namespace

void OracleBudget::check(const Alphabet& alphabet, std::size_t n) const {
  if (alphabet.size() > max_alphabet)
    throw LimitError("oracle alphabet of size " + std::to_string(alphabet.size()) + " exceeds " +
                     std::to_string(max_alphabet));
  if (n > n_max)
    throw LimitError("oracle length " + std::to_string(n) + " exceeds " + std::to_string(n_max));
  double size = 1.0;
  for (std::size_t i = 0; i <= n; ++i) size *= static_cast<double>(alphabet.size());
  if (size >= 1e9) throw LimitError("oracle enumeration too large");
}

bool ast_matches(const RegexAst& ast, std::string_view word) {
  if (word.size() > 63) throw LimitError("oracle words are limited to 63 symbols");
  return step(ast, word, 1) >> word.size() & 1;
}

Membership membership_of(const RegexAst& ast) {
  return [ast](std::string_view w) { return ast_matches(ast, w); };
}

Membership membership_of(const Dfa& dfa) {
  return [dfa](std::string_view w) { return dfa.accepts(w); };
}

std::vector<std::string> enumerate_words(const Alphabet& alphabet, std::size_t n,
                                         const OracleBudget& budget) {
  budget.check(alphabet, n);
  std::vector<std::string> words{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet.symbols()) words.push_back(words[i] + c);
    begin = end;
  }
  return words;
}

std::vector<bool> membership_table(const Membership& in, const std::vector<std::string>& words) {
  std::vector<bool> bits(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) bits[i] = in(words[i]);
  return bits;
}

std::vector<CountRow> oracle_counts(const Membership& in, const Alphabet& alphabet, std::size_t n_max,
                                    const OracleBudget& budget) {
  const auto words = enumerate_words(alphabet, n_max, budget);
  std::vector<CountRow> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) rows[n].n = n;
  for (const auto& w : words)
    if (in(w)) rows[w.size()].exact += 1;
  BigInt total = 0;
  for (auto& r : rows) {
    total += r.exact;
    r.cumulative = total;
  }
  return rows;
}

std::vector<CountRow> oracle_counts(const Dfa& dfa, std::size_t n_max, const OracleBudget& budget) {
  return oracle_counts(membership_of(dfa), dfa.alphabet(), n_max, budget);
}

Rational table_distance(bool exact_length, const std::vector<bool>& l1, const std::vector<bool>& l2,
                        const std::vector<std::string>& words, std::size_t n) {
  BigInt sym = 0;
  BigInt uni = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = words[i].size();
    if (len > n || (exact_length && len != n)) continue;
    if (l1[i] || l2[i]) uni += 1;
    if (l1[i] != l2[i]) sym += 1;
  }
  if (uni == 0) return Rational(0);
  Rational r(sym, uni);
  r.canonicalize();
  return r;
}

Rational oracle_distance(bool exact_length, const Membership& l1, const Membership& l2,
                         const Alphabet& alphabet, std::size_t n, const OracleBudget& budget) {
  const auto words = enumerate_words(alphabet, n, budget);
  return table_distance(exact_length, membership_table(l1, words), membership_table(l2, words), words, n);
}

std::size_t brute_period(const CountMatrix& a) {
  const std::size_t n = a.size();
  std::size_t g = 0;
  CountMatrix power = pattern(a);
  for (std::size_t len = 1; len <= 2 * n; ++len) {
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
    if (trace > 0) g = std::gcd(g, len);
    power = pattern(multiply(power, a));
  }
  return g;
}

bool brute_primitive(const CountMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  CountMatrix power = pattern(a);
  for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
    bool positive = true;
    for (const auto& row : power)
      for (auto x : row) positive = positive && x != 0;
    if (positive) return true;
    power = pattern(multiply(power, a));
  }
  return false;
}

}  // namespace reglang::oracle
