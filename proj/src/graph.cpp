#include "reglang/graph.hpp"

#include "reglang/error.hpp"

namespace reglang {

LabeledGraph::LabeledGraph(Alphabet alphabet, Role role, std::vector<Dfa::State> origin,
                           std::vector<Edge> edges, std::optional<std::uint32_t> initial,
                           std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      role_(role),
      origin_(std::move(origin)),
      edges_(std::move(edges)),
      initial_(initial),
      accepting_(std::move(accepting)) {
  const std::size_t n = origin_.size();
  if (accepting_.size() != n) throw Error("accepting tags do not match vertex count");
  if (initial_ && *initial_ >= n) throw Error("initial vertex out of range");
  std::vector<bool> used(n * alphabet_.size(), false);
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n || e.symbol >= alphabet_.size())
      throw Error("edge refers to a missing vertex or symbol");
    auto slot = e.from * alphabet_.size() + e.symbol;
    if (used[slot]) throw Error("graph is not right-resolving");
    used[slot] = true;
  }
}

std::vector<std::uint32_t> LabeledGraph::adjacency() const {
  const std::size_t n = vertex_count();
  std::vector<std::uint32_t> matrix(n * n, 0);
  for (const Edge& e : edges_) ++matrix[e.from * n + e.to];
  return matrix;
}

std::uint32_t LabeledGraph::adjacency(std::uint32_t u, std::uint32_t v) const {
  std::uint32_t count = 0;
  for (const Edge& e : edges_)
    if (e.from == u && e.to == v) ++count;
  return count;
}

std::vector<std::vector<std::uint32_t>> LabeledGraph::successors() const {
  std::vector<std::vector<std::uint32_t>> out(vertex_count());
  for (const Edge& e : edges_) out[e.from].push_back(e.to);
  return out;
}

LabeledGraph trim(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet().size();

  std::vector<std::vector<Dfa::State>> predecessors(n);
  for (Dfa::State q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) predecessors[dfa.next(q, a)].push_back(q);

  std::vector<bool> coreachable(n, false);
  std::vector<Dfa::State> stack;
  for (Dfa::State q = 0; q < n; ++q) {
    if (dfa.is_accepting(q)) {
      coreachable[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    Dfa::State q = stack.back();
    stack.pop_back();
    for (Dfa::State p : predecessors[q]) {
      if (!coreachable[p]) {
        coreachable[p] = true;
        stack.push_back(p);
      }
    }
  }

  // Every state on a path from the initial state to a useful state is itself
  // useful, so a search restricted to co-reachable states finds them all.
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> vertex_of(n, kUnset);
  std::vector<Dfa::State> origin;
  if (coreachable[dfa.initial()]) {
    vertex_of[dfa.initial()] = 0;
    origin.push_back(dfa.initial());
    for (std::size_t i = 0; i < origin.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        Dfa::State t = dfa.next(origin[i], a);
        if (coreachable[t] && vertex_of[t] == kUnset) {
          vertex_of[t] = static_cast<std::uint32_t>(origin.size());
          origin.push_back(t);
        }
      }
    }
  }

  std::vector<LabeledGraph::Edge> edges;
  std::vector<bool> accepting;
  for (std::uint32_t v = 0; v < origin.size(); ++v) {
    accepting.push_back(dfa.is_accepting(origin[v]));
    for (std::size_t a = 0; a < k; ++a) {
      Dfa::State t = dfa.next(origin[v], a);
      if (vertex_of[t] != kUnset) edges.push_back({v, a, vertex_of[t]});
    }
  }
  std::optional<std::uint32_t> initial;
  if (!origin.empty()) initial = 0;
  return LabeledGraph(dfa.alphabet(), LabeledGraph::Role::Trim, std::move(origin), std::move(edges),
                      initial, std::move(accepting));
}

LabeledGraph induced_subgraph(const LabeledGraph& graph, const std::vector<bool>& keep,
                              LabeledGraph::Role role) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> vertex_of(graph.vertex_count(), kUnset);
  std::vector<Dfa::State> origin;
  std::vector<bool> accepting;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    if (!keep[v]) continue;
    vertex_of[v] = static_cast<std::uint32_t>(origin.size());
    origin.push_back(graph.origin()[v]);
    accepting.push_back(graph.accepting()[v]);
  }
  std::vector<LabeledGraph::Edge> edges;
  for (const auto& e : graph.edges())
    if (keep[e.from] && keep[e.to]) edges.push_back({vertex_of[e.from], e.symbol, vertex_of[e.to]});
  std::optional<std::uint32_t> initial;
  if (graph.initial() && keep[*graph.initial()]) initial = vertex_of[*graph.initial()];
  return LabeledGraph(graph.alphabet(), role, std::move(origin), std::move(edges), initial,
                      std::move(accepting));
}

LabeledGraph essential(const LabeledGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<std::size_t> out_degree(n, 0);
  std::vector<std::vector<std::uint32_t>> successors(n);
  std::vector<std::vector<std::uint32_t>> predecessors(n);
  for (const auto& e : graph.edges()) {
    ++out_degree[e.from];
    ++in_degree[e.to];
    successors[e.from].push_back(e.to);
    predecessors[e.to].push_back(e.from);
  }

  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> doomed;
  for (std::uint32_t v = 0; v < n; ++v)
    if (in_degree[v] == 0 || out_degree[v] == 0) doomed.push_back(v);
  while (!doomed.empty()) {
    std::uint32_t v = doomed.back();
    doomed.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (std::uint32_t w : successors[v])
      if (alive[w] && --in_degree[w] == 0) doomed.push_back(w);
    for (std::uint32_t u : predecessors[v])
      if (alive[u] && --out_degree[u] == 0) doomed.push_back(u);
  }
  return induced_subgraph(graph, alive, LabeledGraph::Role::Essential);
}

}  // namespace reglang
