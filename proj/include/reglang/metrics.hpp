#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "reglang/counting.hpp"
#include "reglang/dfa.hpp"
#include "reglang/spectral.hpp"

namespace reglang {

enum class Metric {
  JnExact,     // J'_n: words of length exactly n
  JnCum,       // J_n: words of length at most n
  Cesaro,      // J_C
  Entropy,     // H
  EntropySum,  // H_S
};

enum class Mode { Exact, Empirical, AnalyticShortcut, PerResidue };

std::string_view to_string(Metric metric);
std::string_view to_string(Mode mode);
/// CLI names: jnp, jn, jc, h, hs.
std::string_view cli_name(Metric metric);
std::optional<Metric> metric_from_cli_name(std::string_view name);

struct DistanceDiagnostics {
  std::size_t n_used = 0;
  std::size_t residue_period = 1;
  std::vector<double> residue_limits;
  /// Extrapolation order that settled each residue limit (0 = raw sequence).
  std::vector<std::size_t> residue_orders;
  std::vector<double> convergence_deltas;
  std::optional<double> trend;
  std::optional<double> h_symdiff;
  std::optional<double> h_union;
  std::optional<double> h_intersection;
  std::string note;
};

struct DistanceResult {
  Metric metric = Metric::JnCum;
  double value = 0.0;
  Mode mode = Mode::Exact;
  /// Exact value for the finite-n metrics.
  std::optional<Rational> rational;
  DistanceDiagnostics diagnostics;
};

nlohmann::json to_json(const DistanceResult& result);

/// The two languages over a shared alphabet plus their set combinations.
class LanguagePair {
 public:
  LanguagePair(const Dfa& l1, const Dfa& l2, std::size_t max_states = kDefaultMaxStates);

  const Dfa& first() const noexcept { return first_; }
  const Dfa& second() const noexcept { return second_; }
  const Dfa& symdiff() const noexcept { return symdiff_; }
  const Dfa& united() const noexcept { return union_; }
  const Dfa& intersection() const noexcept { return intersection_; }
  const Dfa& first_minus_second() const noexcept { return first_minus_; }
  const Dfa& second_minus_first() const noexcept { return second_minus_; }

 private:
  Dfa first_;
  Dfa second_;
  Dfa symdiff_;
  Dfa union_;
  Dfa intersection_;
  Dfa first_minus_;
  Dfa second_minus_;
};

Rational jaccard_exact_n_rational(const Dfa& l1, const Dfa& l2, std::size_t n,
                                  std::size_t max_states = kDefaultMaxStates);
Rational jaccard_cum_n_rational(const Dfa& l1, const Dfa& l2, std::size_t n,
                                std::size_t max_states = kDefaultMaxStates);
/// J'_n = |W_n(L1 xor L2)| / |W_n(L1 or L2)|, 0 on an empty denominator.
double jaccard_exact_n(const Dfa& l1, const Dfa& l2, std::size_t n);
/// J_n = |W_<=n(L1 xor L2)| / |W_<=n(L1 or L2)|, 0 on an empty denominator.
double jaccard_cum_n(const Dfa& l1, const Dfa& l2, std::size_t n);

enum class CesaroMode { Auto, Empirical, Analytic };

struct CesaroConfig {
  CesaroMode mode = CesaroMode::Auto;
  /// Successive-estimate tolerance for each residue limit.
  double tolerance = 1e-9;
  std::size_t passes = 3;
  /// Cap on the number of terms per residue class.
  std::size_t max_terms_per_residue = 5000;
  /// Highest Richardson extrapolation order tried on residue sequences.
  std::size_t max_order = 4;
  /// Number of terms averaged in empirical mode.
  std::size_t empirical_terms = 4096;
  /// Largest |C_N - C_{N/2}| accepted by the empirical fallback.
  double empirical_trend_limit = 1e-3;
  /// Average J'_n instead of J_n (diagnostic variant).
  bool exact_length = false;
  std::size_t max_states = kDefaultMaxStates;
};

/// Cesaro Jaccard distance. Auto mode tries the entropy shortcut first, then
/// per-residue limits with period Q = lcm of the component periods of the
/// trimmed union and symmetric-difference graphs, then a plain running
/// average. Throws ConvergenceError (with the partial value) when nothing
/// settles.
DistanceResult cesaro_jaccard(const Dfa& l1, const Dfa& l2, const CesaroConfig& config = {});

/// H = h(L1 xor L2) / h(L1 or L2); 0 when the union has zero entropy.
DistanceResult entropy_distance(const Dfa& l1, const Dfa& l2,
                                std::size_t max_states = kDefaultMaxStates);

/// H_S = h(L1 and not L2) + h(not L1 and L2), unnormalized.
DistanceResult entropy_sum(const Dfa& l1, const Dfa& l2, std::size_t max_states = kDefaultMaxStates);

struct DistanceOptions {
  std::optional<std::size_t> n;
  CesaroConfig cesaro;
  /// Cap on every product automaton; overrides cesaro.max_states.
  std::size_t max_states = kDefaultMaxStates;
};

/// Dispatches on `metric`. Finite-n metrics need `options.n`.
DistanceResult compute_distance(Metric metric, const Dfa& l1, const Dfa& l2,
                                const DistanceOptions& options = {});

struct Separation {
  std::size_t n = 0;
  /// max over pairs of (s_i + 1)(s_j + 1) - 1, s = minimal state count.
  std::size_t bound = 0;
  std::vector<std::size_t> minimal_states;
};

/// Smallest n with J_n(L_i, L_j) > 0 for every pair. Throws Error when two
/// languages coincide.
Separation separating_n(const std::vector<Dfa>& languages);

enum class AxiomKind { Pseudo, UltraPseudo };

struct AxiomViolation {
  std::string axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomReport {
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

using DistanceMatrix = std::vector<std::vector<double>>;
using DistanceFn = std::function<double(const Dfa&, const Dfa&)>;

/// Non-negativity, zero diagonal, symmetry, and for every unordered triple of
/// distinct indices all three triangle (or max) inequalities.
AxiomReport check_metric_axioms(const DistanceMatrix& d, AxiomKind kind, double tolerance = 1e-9);
AxiomReport check_metric_axioms(const DistanceFn& metric, const std::vector<Dfa>& languages,
                                AxiomKind kind, double tolerance = 1e-9);

}  // namespace reglang
