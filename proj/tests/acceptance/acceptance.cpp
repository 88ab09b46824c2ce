// One line per acceptance criterion; exit status is non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reglang/counting.hpp"
#include "reglang/error.hpp"
#include "reglang/metrics.hpp"
#include "reglang/oracle.hpp"
#include "reglang/spectral.hpp"

using namespace reglang;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FIRST FAILURE: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<Dfa>& corpus_dfas() {
  static const std::vector<Dfa> dfas = fixtures::corpus_dfas();
  return dfas;
}

double h(const Dfa& d) { return language_entropy(d).entropy_bits; }

// Entropies of the corpus pairs, shared by several criteria.
struct PairEntropies {
  double h1, h2, h_sym, h_union, h_inter;
};

const std::vector<std::vector<PairEntropies>>& pair_entropies() {
  static const auto table = [] {
    const auto& d = corpus_dfas();
    std::vector<std::vector<PairEntropies>> t(d.size(), std::vector<PairEntropies>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) {
        LanguagePair p(d[i], d[j]);
        t[i][j] = {h(p.first()), h(p.second()), h(p.symdiff()), h(p.united()), h(p.intersection())};
      }
    return t;
  }();
  return table;
}

BigMatrix literal(const std::vector<std::vector<int>>& rows) {
  BigMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void criterion1(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = cesaro_jaccard(fixtures::dfa("(a|b)*", "ab"), fixtures::dfa("((a|b){2})*", "ab"));
  const double elapsed = seconds_since(t0);
  v.require(std::abs(r.value - 0.5) <= 1e-6, "J_C = 0.5");
  auto limits = r.diagnostics.residue_limits;
  v.require(limits.size() == 2, "two residue classes");
  if (limits.size() == 2) {
    std::sort(limits.begin(), limits.end());
    v.require(std::abs(limits[0] - 1.0 / 3) <= 1e-6 && std::abs(limits[1] - 2.0 / 3) <= 1e-6,
              "residue limits {1/3, 2/3}");
    v.detail << "limits even=" << r.diagnostics.residue_limits[0] << " odd=" << r.diagnostics.residue_limits[1]
             << ", ";
  }
  v.require(elapsed < 1.0, "runtime < 1 s");
  v.detail << "J_C=" << r.value << " in " << elapsed << " s";
}

void criterion2(Verdict& v) {
  Dfa first = fixtures::dfa(fixtures::kExampleFirst);
  Dfa second = fixtures::dfa(fixtures::kExampleSecond);
  auto r = cesaro_jaccard(first, second);
  v.require(r.mode == Mode::AnalyticShortcut && r.value == 0.0, "shortcut gives J_C = 0");
  v.require(std::abs(*r.diagnostics.h_symdiff - 1.0) < 1e-9, "h(sym) = 1");
  v.require(std::abs(*r.diagnostics.h_union - std::log2(3.0)) < 1e-9, "h(union) = log2 3");
  CesaroConfig prime;
  prime.exact_length = true;
  auto p = cesaro_jaccard(first, second, prime);
  v.require(std::abs(p.value - 0.5) <= 1e-3, "exact-length variant = 0.5");
  v.detail << "J_C=" << r.value << " (" << to_string(r.mode) << "), exact-length variant=" << p.value;
}

void criterion3(Verdict& v) {
  const double fig = spectral_radius({{0, 2}, {2, 0}});
  const double example = spectral_radius({{0, 3, 0, 2, 2}, {0, 0, 3, 0, 0}, {0, 3, 0, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}});
  const double trimmed = spectral_radius({{0, 2, 2}, {0, 2, 0}, {0, 0, 2}});
  v.require(std::abs(fig - 2) <= 1e-9, "figure matrix radius 2");
  v.require(std::abs(example - 3) <= 1e-9, "5x5 radius 3");
  v.require(std::abs(trimmed - 2) <= 1e-9, "3x3 radius 2");
  char buf[160];
  std::snprintf(buf, sizeof buf, "radii %.15g, %.15g, %.15g", fig, example, trimmed);
  v.detail << buf;
}

void criterion4(Verdict& v) {
  CountVectors cv{literal({{0, 3, 0, 2, 2}, {0, 0, 3, 0, 0}, {0, 3, 0, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}}),
                  {1, 0, 0, 0, 0},
                  {0, 0, 1, 1, 1}};
  CountVectors r = residue_language(cv, 2, 1);
  v.require(r.final == std::vector<BigInt>{4, 3, 0, 2, 2}, "untrimmed final vector (4,3,0,2,2)");
  CountVectors t = trim_system(r);
  v.require(t.matrix == literal({{0, 4, 4}, {0, 4, 0}, {0, 0, 4}}), "trimmed matrix");
  v.require(t.final == std::vector<BigInt>{4, 2, 2}, "trimmed final vector (4,2,2)");
  bool counts = true;
  for (std::size_t n = 0; n < 12; ++n) counts = counts && count_len(t, n) == count_len(cv, 2 * n + 1);
  v.require(counts, "|W_n(L^(2,1))| = |W_{2n+1}(L)|");
  v.detail << "trimmed system " << t.dimension() << "x" << t.dimension();
}

void criterion5(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& corpus = fixtures::corpus();
  const auto& dfas = corpus_dfas();
  std::set<std::size_t> sizes;
  for (const auto& l : corpus) sizes.insert(l.alphabet.size());
  v.require(corpus.size() >= 20, "at least 20 languages");
  v.require(*sizes.begin() == 1 && *sizes.rbegin() == 4, "alphabet sizes 1 to 4");

  std::size_t count_checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto rows = oracle::oracle_counts(oracle::membership_of(parse_regex(corpus[i].regex)),
                                      Alphabet(corpus[i].alphabet), 8);
    CountStream s(count_vectors(trim(dfas[i])));
    for (const auto& row : rows) {
      v.require(s.exact() == row.exact && s.cumulative() == row.cumulative,
                "counts of " + corpus[i].regex + " at n=" + std::to_string(row.n));
      s.advance();
      ++count_checks;
    }
  }

  // One enumeration over {a,b,c,d}; symbols outside a language's alphabet
  // simply never match.
  const auto words = oracle::enumerate_words(Alphabet("abcd"), 8);
  std::vector<std::vector<bool>> member;
  for (const auto& l : corpus) member.push_back(oracle::membership_table(oracle::membership_of(parse_regex(l.regex)), words));
  std::size_t distance_checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      for (std::size_t n = 0; n <= 8; ++n) {
        const Rational exact = oracle::table_distance(true, member[i], member[j], words, n);
        const Rational cum = oracle::table_distance(false, member[i], member[j], words, n);
        v.require(jaccard_exact_n_rational(dfas[i], dfas[j], n) == exact,
                  "J'_" + std::to_string(n) + " of " + corpus[i].regex + " / " + corpus[j].regex);
        v.require(jaccard_cum_n_rational(dfas[i], dfas[j], n) == cum,
                  "J_" + std::to_string(n) + " of " + corpus[i].regex + " / " + corpus[j].regex);
        distance_checks += 2;
      }
  const double elapsed = seconds_since(t0);
  v.require(elapsed < 30.0, "runtime < 30 s");
  v.detail << corpus.size() << " languages, " << count_checks << " count rows, " << distance_checks
           << " exact rationals, " << elapsed << " s";
}

void criterion6(Verdict& v) {
  const auto& corpus = fixtures::corpus();
  const auto& dfas = corpus_dfas();
  const double eps = kEntropyEpsilon;
  double worst = 0.0;
  std::size_t infinite = 0;
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    auto spectrum = language_entropy(dfas[i]);
    if (spectrum.lambda_class == LambdaClass::Finite) continue;
    ++infinite;
    const double rate = log2_big(count_upto(count_vectors(trim(dfas[i])), 400)) / 400.0;
    const double gap = std::abs(rate - spectrum.entropy_bits);
    worst = std::max(worst, gap);
    v.require(gap < 0.05, "growth rate of " + corpus[i].regex);
  }

  std::size_t identity_checks = 0;
  const auto& e = pair_entropies();
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    const Dfa& l = dfas[i];
    // a language or its complement carries the full entropy.
    const double full = std::log2(static_cast<double>(l.alphabet().size()));
    v.require(std::abs(std::max(h(l), h(complement(l))) - full) < eps, "identity 3 on " + corpus[i].regex);
    // finite languages have zero entropy.
    if (essential(trim(l)).empty()) v.require(h(l) == 0.0, "identity 5 on " + corpus[i].regex);
    identity_checks += 2;
    for (std::size_t j = 0; j < dfas.size(); ++j) {
      if (i == j) continue;
      const auto& p = e[i][j];
      LanguagePair pair(dfas[i], dfas[j]);
      // inclusion is monotone.
      if (trim(pair.first_minus_second()).empty()) v.require(p.h1 <= p.h2 + eps, "identity 1");
      // the union takes the larger entropy.
      v.require(std::abs(p.h_union - std::max(p.h1, p.h2)) < eps, "identity 2");
      // removing a lower-entropy language does not lower the entropy.
      if (p.h1 < p.h2 - 10 * eps) v.require(std::abs(h(pair.second_minus_first()) - p.h2) < eps, "identity 4");
      identity_checks += 3;
    }
  }
  v.detail << infinite << " infinite languages, worst |rate - h| = " << worst << "; " << identity_checks
           << " entropy identity checks";
}

void criterion7(Verdict& v) {
  const auto& dfas = corpus_dfas();
  const std::size_t n = dfas.size();
  const auto& e = pair_entropies();
  DistanceMatrix hm(n, std::vector<double>(n)), hs(n, std::vector<double>(n));
  std::size_t prop_checks = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      hm[i][j] = entropy_distance(dfas[i], dfas[j]).value;
      hs[i][j] = entropy_sum(dfas[i], dfas[j]).value;
      if (i != j && std::abs(e[i][j].h1 - e[i][j].h2) > 1e-6) {
        v.require(std::abs(hm[i][j] - 1.0) < kEntropyEpsilon, "H = 1 when entropies differ");
        ++prop_checks;
      }
    }
  auto ultra = check_metric_axioms(hm, AxiomKind::UltraPseudo, 1e-9);
  auto pseudo = check_metric_axioms(hs, AxiomKind::Pseudo, 1e-9);
  v.require(ultra.triples_checked >= 1140, "at least 1140 triples");
  v.require(ultra.ok(), "H ultra-pseudo-metric");
  v.require(pseudo.ok(), "H_S pseudo-metric");
  for (const auto& bad : ultra.violations)
    v.detail << "H violation " << bad.axiom << " (" << bad.i << "," << bad.j << "," << bad.k << ") ";
  for (const auto& bad : pseudo.violations)
    v.detail << "H_S violation " << bad.axiom << " (" << bad.i << "," << bad.j << "," << bad.k << ") ";
  v.detail << ultra.triples_checked << " triples for each of H and H_S, " << prop_checks
           << " pairs with different entropies all at H = 1";
}

void criterion8(Verdict& v) {
  const auto& dfas = corpus_dfas();
  const std::size_t n = dfas.size();
  std::size_t granular = 0;
  std::size_t non_granular = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      LanguagePair pair(dfas[i], dfas[j]);
      const double left = h(pair.first_minus_second());
      const double right = h(pair.second_minus_first());
      const double d = entropy_sum(dfas[i], dfas[j]).value;
      if (left > 0 && right > 0) {
        for (const Dfa& mid : {pair.united(), pair.intersection()}) {
          const double a = entropy_sum(pair.first(), mid).value;
          const double b = entropy_sum(mid, pair.second()).value;
          v.require(d > std::max(a, b), "midpoint strictly closer");
        }
        ++granular;
      }
      if (right == 0.0) {
        for (const Dfa& l : dfas)
          v.require(d <= std::max(entropy_sum(dfas[i], l).value, entropy_sum(l, dfas[j]).value) + 1e-9,
                    "no strict midpoint");
        ++non_granular;
      }
    }
  v.require(granular > 0 && non_granular > 0, "both suites non-empty");
  v.detail << granular << " ordered pairs with midpoints, " << non_granular << " pairs x " << n
           << " candidates without";
}

void criterion9(Verdict& v) {
  std::vector<std::vector<Dfa>> sets;
  sets.push_back({fixtures::dfa("a*", "a"), fixtures::dfa("(aa)*", "a"), fixtures::dfa("a(aa)*", "a")});
  std::mt19937 rng(20240611);
  const auto& dfas = corpus_dfas();
  for (int s = 0; s < 5; ++s) {
    std::vector<std::size_t> idx(dfas.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Dfa> set;
    for (std::size_t k = 0; k < 3 + static_cast<std::size_t>(s); ++k) set.push_back(dfas[idx[k]]);
    sets.push_back(std::move(set));
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    auto sep = separating_n(sets[s]);
    v.require(sep.n <= sep.bound, "n within the state-count bound");
    // Minimality: every pair separates at n, some pair fails at n - 1.
    bool all_positive = true;
    bool some_zero = sep.n == 0;
    for (std::size_t i = 0; i < sets[s].size(); ++i)
      for (std::size_t j = i + 1; j < sets[s].size(); ++j) {
        all_positive = all_positive && jaccard_cum_n_rational(sets[s][i], sets[s][j], sep.n) > 0;
        if (sep.n > 0) some_zero = some_zero || jaccard_cum_n_rational(sets[s][i], sets[s][j], sep.n - 1) == 0;
      }
    v.require(all_positive && some_zero, "n is the smallest separating length");
    if (s == 0) v.require(sep.n == 1 && sep.bound == 8, "n = 1 and bound 8 for the unary set");
    v.detail << "set" << s << ": n=" << sep.n << " bound=" << sep.bound << (s + 1 < sets.size() ? ", " : "");
  }
}

void criterion10(Verdict& v) {
  const auto& dfas = corpus_dfas();
  const auto& e = pair_entropies();
  std::size_t inside = 0, zero = 0, one = 0, pairs = 0;
  for (std::size_t i = 0; i < dfas.size(); ++i)
    for (std::size_t j = i + 1; j < dfas.size(); ++j) {
      ++pairs;
      double jc = 0.0;
      try {
        jc = cesaro_jaccard(dfas[i], dfas[j]).value;
      } catch (const ConvergenceError& err) {
        v.require(false, std::string("J_C converges: ") + err.what());
        continue;
      }
      const auto& p = e[i][j];
      if (jc > 1e-6 && jc < 1 - 1e-6) {
        ++inside;
        const double hs[] = {p.h1, p.h2, p.h_inter, p.h_sym, p.h_union};
        const auto [lo, hi] = std::minmax_element(std::begin(hs), std::end(hs));
        v.require(*hi - *lo < kEntropyEpsilon, "five entropies equal inside (0,1)");
      }
      if (p.h_sym < p.h_union - 1e-6) {
        ++zero;
        v.require(jc == 0.0, "J_C = 0 when h(sym) < h(union)");
      }
      if (p.h_inter < p.h_union - 1e-6) {
        ++one;
        v.require(jc == 1.0, "J_C = 1 when h(inter) < h(union)");
      }
    }
  v.detail << pairs << " pairs: " << inside << " strictly inside, " << zero << " forced to 0, " << one
           << " forced to 1";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"parity pair J_C = 1/2 with residue limits", criterion1},
      {"worked example shortcut and exact-length contrast", criterion2},
      {"spectral radius regressions", criterion3},
      {"residue language system", criterion4},
      {"oracle equivalence of counts and finite-n distances", criterion5},
      {"entropy growth limit and entropy identities", criterion6},
      {"metric axioms for H and H_S", criterion7},
      {"entropy-sum granularity", criterion8},
      {"separating length bound", criterion9},
      {"Cesaro trichotomy", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    failures += !v.pass;
    std::printf("criterion %zu: %s - %s: %s\n", k + 1, v.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
