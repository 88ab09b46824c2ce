#include "reglang/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "reglang/error.hpp"

namespace reglang {
namespace {

// Collatz-Wielandt bracketed power iteration on B = M^period, where M is an
// irreducible non-negative n*n matrix (row-major). B is block diagonal with
// primitive blocks sharing the Perron root, so the bracket closes.
RadiusEstimate perron_root(const std::vector<double>& m, std::size_t n, std::size_t period,
                           const PowerIterationOptions& options) {
  std::vector<double> x(n, 1.0);
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    for (auto& v : x) v = dist(rng);
  }
  std::vector<double> y(n);
  std::vector<double> tmp(n);
  double width = 0.0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    y = x;
    double log_scale = 0.0;
    for (std::size_t step = 0; step < period; ++step) {
      double top = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += m[i * n + j] * y[j];
        tmp[i] = sum;
        top = std::max(top, sum);
      }
      if (top <= 0.0) throw Error("power iteration reached the zero vector; matrix is not irreducible");
      for (std::size_t i = 0; i < n; ++i) y[i] = tmp[i] / top;
      log_scale += std::log(top);
    }
    double lo = HUGE_VAL;
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    width = (hi - lo) / hi;
    if (width <= options.tolerance) {
      double log_rho = log_scale + std::log(0.5 * (lo + hi));
      return {std::exp(log_rho / static_cast<double>(period)), it, width};
    }
    x.swap(y);
  }
  throw ConvergenceError("power iteration did not converge within " +
                             std::to_string(options.max_iterations) + " iterations",
                         width);
}

std::vector<double> submatrix(const std::vector<std::uint32_t>& full, std::size_t n,
                              const std::vector<std::uint32_t>& component) {
  const std::size_t c = component.size();
  std::vector<double> out(c * c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) out[i * c + j] = full[component[i] * n + component[j]];
  return out;
}

bool has_cycle(const Digraph& successors, const std::vector<std::uint32_t>& component) {
  if (component.size() > 1) return true;
  const auto v = component.front();
  return std::find(successors[v].begin(), successors[v].end(), v) != successors[v].end();
}

}  // namespace

RadiusEstimate component_radius(const LabeledGraph& graph, const std::vector<std::uint32_t>& component,
                                const PowerIterationOptions& options) {
  const std::size_t period = component_period(graph, component);
  return perron_root(submatrix(graph.adjacency(), graph.vertex_count(), component), component.size(),
                     period, options);
}

double spectral_radius(const std::vector<std::vector<std::uint32_t>>& matrix,
                       const PowerIterationOptions& options) {
  const std::size_t n = matrix.size();
  std::vector<std::uint32_t> flat(n * n);
  Digraph successors(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = matrix[i][j];
      if (matrix[i][j] != 0) successors[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  double best = 0.0;
  for (const auto& component : strongly_connected_components(successors)) {
    if (!has_cycle(successors, component)) continue;
    auto estimate = perron_root(submatrix(flat, n, component), component.size(),
                                cycle_period(successors, component), options);
    best = std::max(best, estimate.radius);
  }
  return best;
}

std::string_view to_string(LambdaClass c) {
  switch (c) {
    case LambdaClass::Finite: return "finite";
    case LambdaClass::Unit: return "unit";
    case LambdaClass::Expanding: return "expanding";
  }
  return "unknown";
}

LambdaClass classify_lambda(double lambda) {
  // Integer matrices have a Perron root of 0 or at least 1.
  if (lambda < 0.5) return LambdaClass::Finite;
  if (std::abs(lambda - 1.0) < kEntropyEpsilon) return LambdaClass::Unit;
  return LambdaClass::Expanding;
}

SpectralReport spectral_report(const LabeledGraph& essential_graph, const PowerIterationOptions& options) {
  SpectralReport report;
  const ComponentReport structure = scc_decompose(essential_graph);
  for (const auto& c : structure.components) {
    ComponentSpectrum spectrum;
    spectrum.size = c.vertices.size();
    spectrum.period = c.period;
    spectrum.trivial = c.trivial;
    if (!c.trivial) {
      auto estimate = component_radius(essential_graph, c.vertices, options);
      spectrum.radius = estimate.radius;
      spectrum.iterations = estimate.iterations;
      spectrum.residual = estimate.residual;
      report.iterations += estimate.iterations;
      report.residual = std::max(report.residual, estimate.residual);
    }
    report.spectral_radius = std::max(report.spectral_radius, spectrum.radius);
    report.components.push_back(spectrum);
  }
  report.lambda_class = classify_lambda(report.spectral_radius);
  report.entropy_bits =
      report.lambda_class == LambdaClass::Expanding ? std::log2(report.spectral_radius) : 0.0;
  return report;
}

SpectralReport language_entropy(const Dfa& dfa, const PowerIterationOptions& options) {
  return spectral_report(essential(trim(dfa)), options);
}

double topological_entropy(const LabeledGraph& essential_graph, const PowerIterationOptions& options) {
  return spectral_report(essential_graph, options).entropy_bits;
}

bool entropies_equal(double h1, double h2, double epsilon) { return std::abs(h1 - h2) < epsilon; }

nlohmann::json to_json(const SpectralReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : report.components) {
    components.push_back({{"size", c.size},
                          {"period", c.period},
                          {"trivial", c.trivial},
                          {"radius", c.radius}});
  }
  return {{"entropy_bits", report.entropy_bits},
          {"spectral_radius", report.spectral_radius},
          {"components", std::move(components)},
          {"lambda_class", std::string(to_string(report.lambda_class))},
          {"iterations", report.iterations},
          {"residual", report.residual}};
}

}  // namespace reglang
