#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "reglang/graph.hpp"

namespace reglang {

struct Component {
  std::vector<std::uint32_t> vertices;  // ascending
  /// No cycle passes through the component (single vertex, no self-loop).
  bool trivial = false;
  /// gcd of cycle lengths; 1 for trivial components.
  std::size_t period = 1;
};

/// Strongly connected components of a labeled graph, ordered by their
/// smallest vertex, together with the lcm of nontrivial periods.
struct ComponentReport {
  std::vector<Component> components;
  std::size_t residue_period = 1;

  /// Index into `components` for each vertex.
  std::vector<std::size_t> component_of;
};

ComponentReport scc_decompose(const LabeledGraph& graph);

/// Successor lists; parallel edges may repeat a target.
using Digraph = std::vector<std::vector<std::uint32_t>>;

/// Tarjan's algorithm; each component sorted ascending, components ordered by
/// their smallest vertex.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const Digraph& graph);

/// Period of a strongly connected vertex set of `graph`; see component_period.
std::size_t cycle_period(const Digraph& graph, const std::vector<std::uint32_t>& component);

/// Period of a strongly connected vertex set: gcd over internal edges u->v of
/// level(u) + 1 - level(v), levels taken from a breadth-first search inside
/// the component. Throws UndefinedPeriodError for a trivial component.
std::size_t component_period(const LabeledGraph& graph, const std::vector<std::uint32_t>& component);

bool is_primitive(const LabeledGraph& graph, const std::vector<std::uint32_t>& component);

/// lcm of the periods of the nontrivial components (1 when there are none).
std::size_t residue_period(const ComponentReport& report);

nlohmann::json to_json(const ComponentReport& report);

}  // namespace reglang
