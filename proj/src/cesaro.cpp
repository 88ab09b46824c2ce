#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reglang/components.hpp"
#include "reglang/error.hpp"
#include "reglang/graph.hpp"
#include "reglang/metrics.hpp"

namespace reglang {
namespace {

constexpr mp_bitcnt_t kPrecision = 256;

// Yields J_1, J_2, ... (or the exact-length variant) as high-precision floats.
class JaccardSequence {
 public:
  JaccardSequence(const CountVectors& sym, const CountVectors& uni, bool exact_length)
      : sym_(sym), uni_(uni), exact_length_(exact_length) {}

  mpf_class next() {
    sym_.advance();
    uni_.advance();
    return current();
  }

  mpf_class current() const {
    const BigInt& num = exact_length_ ? sym_.exact() : sym_.cumulative();
    const BigInt& den = exact_length_ ? uni_.exact() : uni_.cumulative();
    mpf_class out(0, kPrecision);
    if (den != 0) {
      mpf_class n(num, kPrecision);
      mpf_class d(den, kPrecision);
      out = n / d;
    }
    return out;
  }

  std::size_t length() const noexcept { return sym_.length(); }

 private:
  CountStream sym_;
  CountStream uni_;
  bool exact_length_;
};

// Running Cesaro averages C_N = (1/N) sum_{i<=N} J_i, kept for the trend.
struct RunningAverage {
  std::vector<double> averages;  // averages[N-1] = C_N
  mpf_class sum{0, kPrecision};

  void push(const mpf_class& x) {
    sum += x;
    averages.push_back(sum.get_d() / static_cast<double>(averages.size() + 1));
  }
  double value() const { return averages.empty() ? 0.0 : averages.back(); }
  double trend() const {
    if (averages.size() < 2) return 0.0;
    return averages.back() - averages[averages.size() / 2 - 1];
  }
};

// One residue class k: the subsequence x_m = J_{Qm+k} and Richardson
// extrapolants of orders 0..K over the last K+1 terms, with t = m+1. Order K
// removes error terms c_1/t + ... + c_K/t^K, which is what polynomially
// growing languages leave behind; geometric errors settle at order 0.
class ResidueTracker {
 public:
  ResidueTracker(std::size_t max_order, std::size_t passes, double tolerance, std::size_t burn_in)
      : max_order_(max_order),
        passes_(passes),
        tolerance_(tolerance),
        burn_in_(burn_in),
        last_(max_order + 1, mpf_class(0, kPrecision)),
        have_last_(max_order + 1, false),
        streak_(max_order + 1, 0) {}

  void push(const mpf_class& x) {
    history_.push_back(x);
    const std::size_t m = history_.size() - 1;
    for (std::size_t k = 0; k <= max_order_ && k <= m; ++k) {
      mpf_class estimate = extrapolate(m, k);
      if (have_last_[k]) {
        mpf_class diff(estimate - last_[k], kPrecision);
        const double delta = std::abs(diff.get_d());
        streak_[k] = delta < tolerance_ ? streak_[k] + 1 : 0;
        if (!converged_ && streak_[k] >= passes_ && m >= burn_in_) {
          converged_ = true;
          // Extrapolation can overshoot a limit sitting on the boundary.
          value_ = std::clamp(estimate.get_d(), 0.0, 1.0);
          order_ = k;
          delta_ = delta;
        }
        if (k == 0) last_delta_ = delta;
      }
      last_[k] = estimate;
      have_last_[k] = true;
    }
  }

  bool converged() const noexcept { return converged_; }
  std::size_t terms() const noexcept { return history_.size(); }
  double value() const { return converged_ ? value_ : (history_.empty() ? 0.0 : history_.back().get_d()); }
  std::size_t order() const noexcept { return order_; }
  double delta() const noexcept { return converged_ ? delta_ : last_delta_; }

 private:
  mpf_class extrapolate(std::size_t m, std::size_t order) const {
    mpf_class sum(0, kPrecision);
    mpz_class binom = 1;  // C(order, i)
    for (std::size_t i = 0; i <= order; ++i) {
      const std::size_t idx = m - order + i;
      mpz_class t_pow;
      mpz_ui_pow_ui(t_pow.get_mpz_t(), idx + 1, order);
      mpf_class term(mpz_class(binom * t_pow), kPrecision);
      term *= history_[idx];
      if ((order - i) % 2 == 0) sum += term;
      else sum -= term;
      binom = binom * (order - i) / (i + 1);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), order);
    return sum / mpf_class(fact, kPrecision);
  }

  std::size_t max_order_;
  std::size_t passes_;
  double tolerance_;
  std::size_t burn_in_;
  std::vector<mpf_class> history_;
  std::vector<mpf_class> last_;
  std::vector<bool> have_last_;
  std::vector<std::size_t> streak_;
  bool converged_ = false;
  double value_ = 0.0;
  std::size_t order_ = 0;
  double delta_ = 0.0;
  double last_delta_ = 0.0;
};

DistanceResult empirical(const CountVectors& sym, const CountVectors& uni, const CesaroConfig& config,
                         DistanceResult result) {
  JaccardSequence seq(sym, uni, config.exact_length);
  RunningAverage avg;
  for (std::size_t i = 0; i < std::max<std::size_t>(config.empirical_terms, 1); ++i) avg.push(seq.next());
  result.mode = Mode::Empirical;
  result.value = avg.value();
  result.diagnostics.n_used = avg.averages.size();
  result.diagnostics.trend = avg.trend();
  return result;
}

}  // namespace

DistanceResult cesaro_jaccard(const Dfa& l1, const Dfa& l2, const CesaroConfig& config) {
  LanguagePair pair(l1, l2, config.max_states);
  DistanceResult result;
  result.metric = Metric::Cesaro;
  if (config.exact_length) result.diagnostics.note = "exact-length variant";

  const LabeledGraph sym_graph = trim(pair.symdiff());
  const LabeledGraph uni_graph = trim(pair.united());
  const CountVectors sym = count_vectors(sym_graph);
  const CountVectors uni = count_vectors(uni_graph);

  if (config.mode == CesaroMode::Empirical) return empirical(sym, uni, config, std::move(result));

  if (!config.exact_length) {
    const double h_sym = spectral_report(essential(sym_graph)).entropy_bits;
    const double h_uni = spectral_report(essential(uni_graph)).entropy_bits;
    const double h_int = language_entropy(pair.intersection()).entropy_bits;
    result.diagnostics.h_symdiff = h_sym;
    result.diagnostics.h_union = h_uni;
    result.diagnostics.h_intersection = h_int;
    const double margin = 10.0 * kEntropyEpsilon;
    if (h_sym < h_uni - margin) {
      result.mode = Mode::AnalyticShortcut;
      result.value = 0.0;
      return result;
    }
    if (h_int < h_uni - margin) {
      result.mode = Mode::AnalyticShortcut;
      result.value = 1.0;
      return result;
    }
  }

  const std::size_t q = std::lcm(scc_decompose(sym_graph).residue_period,
                                 scc_decompose(uni_graph).residue_period);
  result.diagnostics.residue_period = q;
  const std::size_t burn_in =
      (sym.dimension() + uni.dimension() + 1 + q - 1) / q + config.max_order + 1;

  std::vector<ResidueTracker> residues(
      q, ResidueTracker(config.max_order, config.passes, config.tolerance, burn_in));
  JaccardSequence seq(sym, uni, config.exact_length);
  RunningAverage avg;
  // J_0 feeds residue 0 but not the Cesaro average, which starts at i = 1.
  residues[0].push(seq.current());
  bool done = false;
  bool exhausted = false;
  while (!done && !exhausted) {
    const std::size_t n = seq.length() + 1;
    mpf_class x = seq.next();
    avg.push(x);
    ResidueTracker& r = residues[n % q];
    if (!r.converged()) r.push(x);
    done = std::all_of(residues.begin(), residues.end(), [](const auto& t) { return t.converged(); });
    exhausted = r.terms() > config.max_terms_per_residue && !r.converged();
  }

  double total = 0.0;
  for (const auto& r : residues) {
    result.diagnostics.residue_limits.push_back(r.value());
    result.diagnostics.residue_orders.push_back(r.order());
    result.diagnostics.convergence_deltas.push_back(r.delta());
    total += r.value();
  }
  result.diagnostics.n_used = seq.length();

  if (done) {
    result.mode = Mode::PerResidue;
    result.value = total / static_cast<double>(q);
    return result;
  }

  result.diagnostics.trend = avg.trend();
  if (config.mode == CesaroMode::Auto && std::abs(avg.trend()) < config.empirical_trend_limit) {
    result.mode = Mode::Empirical;
    result.value = avg.value();
    result.diagnostics.note = "per-residue limits did not settle; running average used";
    return result;
  }
  throw ConvergenceError("Cesaro average did not converge within " + std::to_string(seq.length()) + " terms",
                         std::abs(avg.trend()), avg.value());
}

}  // namespace reglang
