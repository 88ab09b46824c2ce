#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "reglang/components.hpp"
#include "reglang/dfa.hpp"
#include "reglang/graph.hpp"

namespace reglang {

/// Entropies closer than this are treated as equal.
inline constexpr double kEntropyEpsilon = 1e-9;

struct PowerIterationOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
  /// Start vector: uniform when unset, otherwise positive pseudo-random entries.
  std::optional<std::uint64_t> seed;
};

struct RadiusEstimate {
  double radius = 0.0;
  std::size_t iterations = 0;
  /// Relative width of the final Collatz-Wielandt bracket.
  double residual = 0.0;
};

/// Perron root of a strongly connected component with at least one edge.
/// Power iteration runs on A_c^p (p = component period, so every cyclic
/// class is primitive) and the p-th root is taken at the end. Throws
/// ConvergenceError past the iteration cap.
RadiusEstimate component_radius(const LabeledGraph& graph, const std::vector<std::uint32_t>& component,
                                const PowerIterationOptions& options = {});

/// Spectral radius of an arbitrary square non-negative integer matrix, taken
/// as the maximum over its strongly connected components.
double spectral_radius(const std::vector<std::vector<std::uint32_t>>& matrix,
                       const PowerIterationOptions& options = {});

enum class LambdaClass { Finite, Unit, Expanding };

std::string_view to_string(LambdaClass c);

struct ComponentSpectrum {
  std::size_t size = 0;
  std::size_t period = 1;
  bool trivial = false;
  double radius = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
};

struct SpectralReport {
  std::vector<ComponentSpectrum> components;
  double spectral_radius = 0.0;
  /// log2 of the spectral radius in bits per symbol; 0 when there is no cycle.
  double entropy_bits = 0.0;
  LambdaClass lambda_class = LambdaClass::Finite;
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Spectrum of an essential graph: per component radius, the dominant one,
/// and its log2.
SpectralReport spectral_report(const LabeledGraph& essential_graph,
                               const PowerIterationOptions& options = {});

/// h(L) via the essential graph of the trimmed automaton.
SpectralReport language_entropy(const Dfa& dfa, const PowerIterationOptions& options = {});

/// max over components of log2(radius); 0 for the empty graph.
double topological_entropy(const LabeledGraph& essential_graph,
                           const PowerIterationOptions& options = {});

bool entropies_equal(double h1, double h2, double epsilon = kEntropyEpsilon);

LambdaClass classify_lambda(double lambda);

nlohmann::json to_json(const SpectralReport& report);

}  // namespace reglang
