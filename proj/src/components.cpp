#include "reglang/components.hpp"

#include <algorithm>
#include <numeric>

#include "reglang/error.hpp"

namespace reglang {
namespace {

// Iterative Tarjan.
std::vector<std::vector<std::uint32_t>> tarjan(const std::vector<std::vector<std::uint32_t>>& succ) {
  const std::size_t n = succ.size();
  constexpr auto kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> out;
  std::size_t counter = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const std::uint32_t v = frame.v;
      if (frame.next_edge < succ[v].size()) {
        const std::uint32_t w = succ[v][frame.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> strongly_connected_components(const Digraph& graph) {
  auto groups = tarjan(graph);
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

std::size_t cycle_period(const Digraph& successors, const std::vector<std::uint32_t>& component) {
  if (component.empty()) throw UndefinedPeriodError("empty component has no period");
  std::vector<bool> inside(successors.size(), false);
  for (auto v : component) inside[v] = true;

  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(successors.size(), kUnseen);
  std::vector<std::uint32_t> queue{component.front()};
  level[component.front()] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto w : successors[queue[i]]) {
      if (inside[w] && level[w] == kUnseen) {
        level[w] = level[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }

  std::size_t period = 0;
  for (auto u : component) {
    for (auto v : successors[u]) {
      if (!inside[v]) continue;
      auto a = level[u] + 1;
      auto b = level[v];
      period = std::gcd(period, a > b ? a - b : b - a);
    }
  }
  if (period == 0) throw UndefinedPeriodError("component has no cycle, so no period");
  return period;
}

std::size_t component_period(const LabeledGraph& graph, const std::vector<std::uint32_t>& component) {
  return cycle_period(graph.successors(), component);
}

bool is_primitive(const LabeledGraph& graph, const std::vector<std::uint32_t>& component) {
  return component_period(graph, component) == 1;
}

ComponentReport scc_decompose(const LabeledGraph& graph) {
  ComponentReport report;
  const Digraph successors = graph.successors();
  auto groups = strongly_connected_components(successors);

  report.component_of.assign(graph.vertex_count(), 0);
  std::vector<bool> self_loop(graph.vertex_count(), false);
  for (const auto& e : graph.edges())
    if (e.from == e.to) self_loop[e.from] = true;

  for (auto& vertices : groups) {
    Component c;
    c.trivial = vertices.size() == 1 && !self_loop[vertices.front()];
    c.vertices = std::move(vertices);
    c.period = c.trivial ? 1 : cycle_period(successors, c.vertices);
    for (auto v : c.vertices) report.component_of[v] = report.components.size();
    report.components.push_back(std::move(c));
  }
  report.residue_period = residue_period(report);
  return report;
}

std::size_t residue_period(const ComponentReport& report) {
  std::size_t q = 1;
  for (const auto& c : report.components)
    if (!c.trivial) q = std::lcm(q, c.period);
  return q;
}

nlohmann::json to_json(const ComponentReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : report.components) {
    components.push_back({{"vertices", c.vertices},
                          {"size", c.vertices.size()},
                          {"trivial", c.trivial},
                          {"period", c.period}});
  }
  return {{"components", std::move(components)}, {"residue_period", report.residue_period}};
}

}  // namespace reglang
