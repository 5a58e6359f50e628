#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chromatica {

using Node = int;

/// Undirected edge. Inside a Graph every edge is stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on nodes 0..n-1.
///
/// Adjacency is stored in compressed rows with each row sorted ascending,
/// and the edge list is kept in lexicographic (u, v) order with u < v. The
/// position of an edge in that list is its edge index, which is what edge
/// colourings and line graphs are keyed on.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Node> neighbours(Node v) const noexcept {
    const auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::size_t degree(Node v) const noexcept {
    const auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }

  std::span<const Edge> edges() const noexcept { return edges_; }

  bool adjacent(Node u, Node v) const noexcept;

  /// Position of edge {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(Node u, Node v) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edge_list);

  std::vector<std::size_t> offsets_;
  std::vector<Node> adjacency_;
  std::vector<Edge> edges_;
};

/// Builds a simple graph. Duplicate edges (in either orientation) collapse;
/// self-loops, out-of-range endpoints and n == 0 throw InvalidArgument.
Graph build_graph(std::size_t n, std::span<const Edge> edge_list);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

struct Bipartition {
  std::vector<std::uint8_t> side;
};

struct CliqueResult {
  std::vector<Node> members;

  std::size_t size() const noexcept { return members.size(); }
};

std::size_t max_degree(const Graph& g);

/// Two-colours each component by BFS, putting its lowest-index node on side 0.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

/// Connected with every degree even.
bool is_eulerian(const Graph& g);

/// Multi-start greedy clique: from every seed node, extend through its
/// neighbours ordered by descending degree (ties by lower index), keeping
/// the largest clique seen (ties by lower seed). The result is maximal by
/// inclusion.
CliqueResult greedy_clique(const Graph& g);

/// Subgraph induced by `nodes`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Node> nodes);

}  // namespace chromatica
