#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "reglang/alphabet.hpp"
#include "reglang/dfa.hpp"

namespace reglang {

/// Right-resolving labeled multigraph carved out of a DFA.
///
/// Vertices are numbered 0..n-1 in breadth-first order of the source DFA;
/// `origin[v]` names the DFA state behind vertex v. The trim role keeps the
/// initial/accepting tags so that word counts can be taken on the graph.
class LabeledGraph {
 public:
  enum class Role { Trim, Essential };

  struct Edge {
    std::uint32_t from;
    std::size_t symbol;
    std::uint32_t to;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  LabeledGraph(Alphabet alphabet, Role role, std::vector<Dfa::State> origin, std::vector<Edge> edges,
               std::optional<std::uint32_t> initial, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Role role() const noexcept { return role_; }
  std::size_t vertex_count() const noexcept { return origin_.size(); }
  bool empty() const noexcept { return origin_.empty(); }
  const std::vector<Dfa::State>& origin() const noexcept { return origin_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Initial vertex, when it survived trimming.
  std::optional<std::uint32_t> initial() const noexcept { return initial_; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }

  /// Row-major n*n matrix; entry (u, v) counts edges u -> v.
  std::vector<std::uint32_t> adjacency() const;
  std::uint32_t adjacency(std::uint32_t u, std::uint32_t v) const;

  /// Successor lists (one entry per edge, so duplicates mean parallel edges).
  std::vector<std::vector<std::uint32_t>> successors() const;

 private:
  Alphabet alphabet_;
  Role role_;
  std::vector<Dfa::State> origin_;
  std::vector<Edge> edges_;
  std::optional<std::uint32_t> initial_;
  std::vector<bool> accepting_;
};

/// Keeps the states that are reachable from the initial state and can reach
/// an accepting state. The empty language yields an empty graph.
LabeledGraph trim(const Dfa& dfa);

/// Repeatedly removes vertices lacking an incoming or an outgoing edge.
LabeledGraph essential(const LabeledGraph& graph);

/// Subgraph induced by `keep` (a per-vertex mask), renumbered in vertex order.
LabeledGraph induced_subgraph(const LabeledGraph& graph, const std::vector<bool>& keep,
                              LabeledGraph::Role role);

}  // namespace reglang
