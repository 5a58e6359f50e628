#include "chromatica/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "chromatica/error.hpp"

namespace chromatica {

bool Graph::adjacent(Node u, Node v) const noexcept {
  const auto n = node_count();
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
    return false;
  }
  // search the shorter row
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto row = neighbours(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Node u, Node v) const noexcept {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
  if (n == 0) throw InvalidArgument("graph must have at least one node");

  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw InvalidArgument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw InvalidArgument("self-loop at node " + std::to_string(a));
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each row is filled in ascending order
  // except for the "lower" neighbours, which also arrive ascending by u.
  for (const auto& e : edges) g.adjacency_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
  for (const auto& e : edges) g.adjacency_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edges_ = std::move(edges);
  return g;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(static_cast<Node>(v)));
  return best;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const auto n = g.node_count();
  constexpr std::uint8_t unset = 2;
  Bipartition result{std::vector<std::uint8_t>(n, unset)};
  std::queue<Node> frontier;
  for (std::size_t start = 0; start < n; ++start) {
    if (result.side[start] != unset) continue;
    result.side[start] = 0;
    frontier.push(static_cast<Node>(start));
    while (!frontier.empty()) {
      const Node u = frontier.front();
      frontier.pop();
      const auto su = result.side[static_cast<std::size_t>(u)];
      for (Node w : g.neighbours(u)) {
        auto& sw = result.side[static_cast<std::size_t>(w)];
        if (sw == unset) {
          sw = static_cast<std::uint8_t>(1 - su);
          frontier.push(w);
        } else if (sw == su) {
          return std::nullopt;
        }
      }
    }
  }
  return result;
}

bool is_connected(const Graph& g) {
  const auto n = g.node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node u = stack.back();
    stack.pop_back();
    for (Node w : g.neighbours(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_eulerian(const Graph& g) {
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.degree(static_cast<Node>(v)) % 2 != 0) return false;
  }
  return is_connected(g);
}

CliqueResult greedy_clique(const Graph& g) {
  const auto n = g.node_count();
  CliqueResult best;
  std::vector<Node> candidates;
  std::vector<Node> clique;
  for (std::size_t s = 0; s < n; ++s) {
    const Node seed = static_cast<Node>(s);
    // a clique through seed has at most deg(seed)+1 members
    if (g.degree(seed) + 1 <= best.size()) continue;
    const auto row = g.neighbours(seed);
    candidates.assign(row.begin(), row.end());
    std::sort(candidates.begin(), candidates.end(), [&](Node a, Node b) {
      const auto da = g.degree(a);
      const auto db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    clique.assign(1, seed);
    for (Node c : candidates) {
      const bool joins_all =
          std::all_of(clique.begin(), clique.end(), [&](Node member) { return g.adjacent(member, c); });
      if (joins_all) clique.push_back(c);
    }
    if (clique.size() > best.size()) best.members = clique;
  }
  std::sort(best.members.begin(), best.members.end());
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  std::vector<int> position(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) position[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = position[static_cast<std::size_t>(e.u)];
    const int b = position[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return build_graph(nodes.size(), edges);
}

}  // namespace chromatica
