#include "reglang/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "reglang/error.hpp"
#include "reglang/graph.hpp"

namespace reglang {
namespace {

Rational safe_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) return Rational(0);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct PairCounts {
  BigInt symdiff_exact, union_exact, symdiff_cum, union_cum;
};

PairCounts counts_at(const Dfa& l1, const Dfa& l2, std::size_t n, std::size_t max_states) {
  LanguagePair pair(l1, l2, max_states);
  CountStream sym(count_vectors(trim(pair.symdiff())));
  CountStream uni(count_vectors(trim(pair.united())));
  while (sym.length() < n) {
    sym.advance();
    uni.advance();
  }
  return {sym.exact(), uni.exact(), sym.cumulative(), uni.cumulative()};
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::JnExact: return "Jn_exact";
    case Metric::JnCum: return "Jn_cum";
    case Metric::Cesaro: return "cesaro";
    case Metric::Entropy: return "entropy";
    case Metric::EntropySum: return "entropy_sum";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Exact: return "exact";
    case Mode::Empirical: return "empirical";
    case Mode::AnalyticShortcut: return "analytic-shortcut";
    case Mode::PerResidue: return "per-residue";
  }
  return "unknown";
}

std::string_view cli_name(Metric metric) {
  switch (metric) {
    case Metric::JnExact: return "jnp";
    case Metric::JnCum: return "jn";
    case Metric::Cesaro: return "jc";
    case Metric::Entropy: return "h";
    case Metric::EntropySum: return "hs";
  }
  return "unknown";
}

std::optional<Metric> metric_from_cli_name(std::string_view name) {
  for (Metric m : {Metric::JnExact, Metric::JnCum, Metric::Cesaro, Metric::Entropy, Metric::EntropySum})
    if (cli_name(m) == name) return m;
  return std::nullopt;
}

LanguagePair::LanguagePair(const Dfa& l1, const Dfa& l2, std::size_t max_states)
    : first_(harmonize(l1, l2).first),
      second_(extend_alphabet(l2, first_.alphabet())),
      symdiff_(combine(first_, second_, SetOp::SymDiff, max_states)),
      union_(combine(first_, second_, SetOp::Union, max_states)),
      intersection_(combine(first_, second_, SetOp::Intersect, max_states)),
      first_minus_(combine(first_, second_, SetOp::Minus, max_states)),
      second_minus_(combine(second_, first_, SetOp::Minus, max_states)) {}

Rational jaccard_exact_n_rational(const Dfa& l1, const Dfa& l2, std::size_t n, std::size_t max_states) {
  auto c = counts_at(l1, l2, n, max_states);
  return safe_ratio(c.symdiff_exact, c.union_exact);
}

Rational jaccard_cum_n_rational(const Dfa& l1, const Dfa& l2, std::size_t n, std::size_t max_states) {
  auto c = counts_at(l1, l2, n, max_states);
  return safe_ratio(c.symdiff_cum, c.union_cum);
}

double jaccard_exact_n(const Dfa& l1, const Dfa& l2, std::size_t n) {
  return jaccard_exact_n_rational(l1, l2, n).get_d();
}

double jaccard_cum_n(const Dfa& l1, const Dfa& l2, std::size_t n) {
  return jaccard_cum_n_rational(l1, l2, n).get_d();
}

DistanceResult entropy_distance(const Dfa& l1, const Dfa& l2, std::size_t max_states) {
  LanguagePair pair(l1, l2, max_states);
  const double h_sym = language_entropy(pair.symdiff()).entropy_bits;
  const double h_union = language_entropy(pair.united()).entropy_bits;
  DistanceResult result;
  result.metric = Metric::Entropy;
  result.mode = Mode::Exact;
  result.diagnostics.h_symdiff = h_sym;
  result.diagnostics.h_union = h_union;
  if (h_union == 0.0) {
    result.value = 0.0;
  } else if (entropies_equal(h_sym, h_union)) {
    result.value = 1.0;
  } else {
    result.value = h_sym / h_union;
  }
  return result;
}

DistanceResult entropy_sum(const Dfa& l1, const Dfa& l2, std::size_t max_states) {
  LanguagePair pair(l1, l2, max_states);
  DistanceResult result;
  result.metric = Metric::EntropySum;
  result.mode = Mode::Exact;
  result.value = language_entropy(pair.first_minus_second()).entropy_bits +
                 language_entropy(pair.second_minus_first()).entropy_bits;
  return result;
}

DistanceResult compute_distance(Metric metric, const Dfa& l1, const Dfa& l2,
                                const DistanceOptions& options) {
  switch (metric) {
    case Metric::JnExact:
    case Metric::JnCum: {
      if (!options.n) throw Error("metric " + std::string(cli_name(metric)) + " needs n");
      DistanceResult result;
      result.metric = metric;
      result.mode = Mode::Exact;
      result.rational = metric == Metric::JnExact ? jaccard_exact_n_rational(l1, l2, *options.n, options.max_states)
                                                  : jaccard_cum_n_rational(l1, l2, *options.n, options.max_states);
      result.value = result.rational->get_d();
      result.diagnostics.n_used = *options.n;
      return result;
    }
    case Metric::Cesaro: {
      CesaroConfig config = options.cesaro;
      config.max_states = options.max_states;
      if (options.n && config.mode == CesaroMode::Empirical) config.empirical_terms = *options.n;
      return cesaro_jaccard(l1, l2, config);
    }
    case Metric::Entropy:
      return entropy_distance(l1, l2, options.max_states);
    case Metric::EntropySum:
      return entropy_sum(l1, l2, options.max_states);
  }
  throw Error("unknown metric");
}

Separation separating_n(const std::vector<Dfa>& languages) {
  Separation out;
  if (languages.empty()) return out;
  Alphabet common = languages.front().alphabet();
  for (const auto& l : languages) common = common.united(l.alphabet());
  std::vector<Dfa> minimal;
  for (const auto& l : languages) {
    minimal.push_back(minimize(extend_alphabet(l, common)));
    out.minimal_states.push_back(minimal.back().state_count());
  }
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j)
      out.bound = std::max(out.bound, (out.minimal_states[i] + 1) * (out.minimal_states[j] + 1) - 1);

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      LabeledGraph diff = trim(combine(minimal[i], minimal[j], SetOp::SymDiff));
      if (diff.empty())
        throw Error("languages " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
      // J_n > 0 exactly when the symmetric difference has a word of length <= n.
      CountStream stream(count_vectors(diff));
      // A nonempty trim graph has a word no longer than its vertex count.
      while (stream.cumulative() == 0) stream.advance();
      out.n = std::max(out.n, stream.length());
    }
  }
  return out;
}

AxiomReport check_metric_axioms(const DistanceMatrix& d, AxiomKind kind, double tolerance) {
  AxiomReport report;
  const std::size_t n = d.size();
  auto flag = [&report](std::string axiom, std::size_t i, std::size_t j, std::size_t k, double lhs,
                        double rhs) {
    report.violations.push_back({std::move(axiom), i, j, k, lhs, rhs});
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i][i]) > tolerance) flag("zero diagonal", i, i, i, d[i][i], 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.pairs_checked;
      if (d[i][j] < -tolerance) flag("non-negativity", i, j, j, d[i][j], 0.0);
      if (std::abs(d[i][j] - d[j][i]) > tolerance) flag("symmetry", i, j, j, d[i][j], d[j][i]);
    }
  }
  // For each triple, each index in turn plays the middle point.
  auto bound = [&](std::size_t a, std::size_t mid, std::size_t b) {
    return kind == AxiomKind::Pseudo ? d[a][mid] + d[mid][b] : std::max(d[a][mid], d[mid][b]);
  };
  const char* name = kind == AxiomKind::Pseudo ? "triangle" : "ultrametric";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.triples_checked;
        if (d[i][k] > bound(i, j, k) + tolerance) flag(name, i, j, k, d[i][k], bound(i, j, k));
        if (d[i][j] > bound(i, k, j) + tolerance) flag(name, i, k, j, d[i][j], bound(i, k, j));
        if (d[j][k] > bound(j, i, k) + tolerance) flag(name, j, i, k, d[j][k], bound(j, i, k));
      }
  return report;
}

AxiomReport check_metric_axioms(const DistanceFn& metric, const std::vector<Dfa>& languages,
                                AxiomKind kind, double tolerance) {
  const std::size_t n = languages.size();
  DistanceMatrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = metric(languages[i], languages[j]);
  return check_metric_axioms(d, kind, tolerance);
}

nlohmann::json to_json(const DistanceResult& result) {
  nlohmann::json diagnostics = {{"n_used", result.diagnostics.n_used}};
  const auto& diag = result.diagnostics;
  if (result.metric == Metric::Cesaro) diagnostics["residue_period"] = diag.residue_period;
  if (!diag.residue_limits.empty()) {
    diagnostics["residue_limits"] = diag.residue_limits;
    diagnostics["residue_orders"] = diag.residue_orders;
    diagnostics["convergence_deltas"] = diag.convergence_deltas;
  }
  if (diag.trend) diagnostics["trend"] = *diag.trend;
  if (diag.h_symdiff) diagnostics["h_symdiff"] = *diag.h_symdiff;
  if (diag.h_union) diagnostics["h_union"] = *diag.h_union;
  if (diag.h_intersection) diagnostics["h_intersection"] = *diag.h_intersection;
  if (!diag.note.empty()) diagnostics["note"] = diag.note;

  nlohmann::json j = {{"metric", std::string(to_string(result.metric))},
                      {"value", result.value},
                      {"mode", std::string(to_string(result.mode))},
                      {"diagnostics", std::move(diagnostics)}};
  if (result.rational) j["rational"] = result.rational->get_str();
  return j;
}

}  // namespace reglang
