#pragma once

// Reference implementations for tests. Nothing here calls into the
// colouring, transforms or analysis code it is used to check.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chromatica/graph.hpp"
#include "chromatica/random.hpp"

namespace oracle {

using chromatica::Edge;
using chromatica::Graph;
using chromatica::Node;
using chromatica::Rng;

inline bool proper(const Graph& g, const std::vector<int>& labels) {
  for (const Edge& e : g.edges()) {
    if (labels[static_cast<std::size_t>(e.u)] == labels[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

// Enumerates every partition of the nodes into labelled blocks (restricted
// growth strings, so each partition once) and keeps the smallest proper one.
inline std::size_t brute_chromatic_number(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0;
  std::vector<int> labels(n, 0);
  std::size_t best = n;
  auto rec = [&](auto&& self, std::size_t i, int blocks) -> void {
    if (i == n) {
      if (proper(g, labels)) best = std::min(best, static_cast<std::size_t>(blocks));
      return;
    }
    for (int c = 0; c <= blocks; ++c) {
      labels[i] = c;
      self(self, i + 1, std::max(blocks, c + 1));
    }
  };
  labels[0] = 0;
  rec(rec, 1, 1);
  return best;
}

// chi via dynamic programming over node subsets: f(S) = 1 + min f(S \ I)
// over independent I containing the lowest node of S. n <= 16.
inline std::size_t dp_chromatic_number(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }
  std::vector<bool> independent(std::size_t{full} + 1, false);
  independent[0] = true;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const auto low = static_cast<std::size_t>(__builtin_ctz(s));
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (adj[low] & rest) == 0;
  }
  std::vector<std::uint8_t> f(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    std::uint8_t best = 255;
    // subsets t of rest; I = t | low
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      const std::uint32_t i = t | low;
      if (independent[i]) best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(f[s ^ i] + 1));
      if (t == 0) break;
    }
    f[s] = best;
  }
  return f[full];
}

inline Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        out.push_back({static_cast<Node>(i), static_cast<Node>(j)});
      }
    }
  }
  return chromatica::build_graph(std::max<std::size_t>(edges.size(), 1), out);
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) d = std::max(d, g.neighbours(static_cast<Node>(v)).size());
  return d;
}

// 2-colouring by exhaustive search over all 2^n side assignments.
inline bool brute_bipartite(const Graph& g) {
  const std::size_t n = g.node_count();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1U) == ((mask >> e.v) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline Graph relabel(const Graph& g, const std::vector<Node>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return chromatica::build_graph(g.node_count(), edges);
}

inline std::vector<Node> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  chromatica::shuffle(perm, rng);
  return perm;
}

inline Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back({static_cast<Node>(rng.below(v)), static_cast<Node>(v)});
  }
  return relabel(chromatica::build_graph(n, edges), random_permutation(n, rng));
}

inline Graph random_connected(std::size_t n, double extra, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Node>(rng.below(v)), static_cast<Node>(v)});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.uniform() < extra) edges.push_back({static_cast<Node>(u), static_cast<Node>(v)});
    }
  }
  return relabel(chromatica::build_graph(n, edges), random_permutation(n, rng));
}

// Random split into two sides, each cross pair an edge with probability p.
inline Graph random_bipartite(std::size_t n, double p, Rng& rng) {
  std::vector<int> side(n);
  for (auto& s : side) s = static_cast<int>(rng.below(2));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && rng.uniform() < p) edges.push_back({static_cast<Node>(u), static_cast<Node>(v)});
    }
  }
  return chromatica::build_graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Node>(i), static_cast<Node>((i + 1) % n)});
  return chromatica::build_graph(n, edges);
}

inline Graph wheel(std::size_t n) {
  std::vector<Edge> edges;
  const std::size_t rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.push_back({0, static_cast<Node>(1 + i)});
    edges.push_back({static_cast<Node>(1 + i), static_cast<Node>(1 + (i + 1) % rim)});
  }
  return chromatica::build_graph(n, edges);
}

// Sierpinski graph built by gluing three copies of the previous level at
// their corners (level 0 is a triangle). Returns the graph only.
inline Graph sierpinski(std::size_t level) {
  struct Piece {
    std::size_t n;
    std::vector<Edge> edges;
    Node corner[3];
  };
  Piece p{3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}};
  for (std::size_t l = 0; l < level; ++l) {
    // copy i is offset by i * p.n; glue corner pairs with union-find
    const std::size_t total = 3 * p.n;
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto id = [&](std::size_t copy, Node v) { return copy * p.n + static_cast<std::size_t>(v); };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    // copy 0 at corner 0, copy 1 at corner 1, copy 2 at corner 2
    unite(id(0, p.corner[1]), id(1, p.corner[0]));
    unite(id(1, p.corner[2]), id(2, p.corner[1]));
    unite(id(2, p.corner[0]), id(0, p.corner[2]));
    std::map<std::size_t, Node> compact;
    auto node = [&](std::size_t x) {
      const auto root = find(x);
      const auto it = compact.find(root);
      if (it != compact.end()) return it->second;
      const auto fresh = static_cast<Node>(compact.size());
      compact.emplace(root, fresh);
      return fresh;
    };
    Piece next;
    for (std::size_t c = 0; c < 3; ++c) {
      for (const Edge& e : p.edges) next.edges.push_back({node(id(c, e.u)), node(id(c, e.v))});
    }
    next.corner[0] = node(id(0, p.corner[0]));
    next.corner[1] = node(id(1, p.corner[1]));
    next.corner[2] = node(id(2, p.corner[2]));
    next.n = compact.size();
    for (Edge& e : next.edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    p = std::move(next);
  }
  return chromatica::build_graph(p.n, p.edges);
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.node_count(); ++v) d.push_back(g.neighbours(static_cast<Node>(v)).size());
  std::sort(d.begin(), d.end());
  return d;
}

inline std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  const auto n = static_cast<Node>(g.node_count());
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Node c = b + 1; c < n; ++c) count += g.adjacent(a, c) && g.adjacent(b, c);
    }
  }
  return count;
}

// Minimal XML well-formedness check for generated SVG: prolog, one root,
// balanced tags, quoted unique attributes, no stray '<' or '&' in text.
struct XmlElement {
  std::string name;
  std::map<std::string, std::string> attributes;
};

inline std::optional<std::vector<XmlElement>> parse_xml(std::string_view text) {
  std::vector<XmlElement> elements;
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_closed = false;
  auto is_name = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':' || c == '_'; };
  if (text.substr(0, 5) == "<?xml") {
    const auto end = text.find("?>");
    if (end == std::string_view::npos) return std::nullopt;
    i = end + 2;
  }
  while (i < text.size()) {
    if (text[i] != '<') {
      if (text[i] == '&') return std::nullopt;
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(text[i]))) return std::nullopt;
      ++i;
      continue;
    }
    ++i;
    if (i < text.size() && text[i] == '/') {
      ++i;
      std::string name;
      while (i < text.size() && is_name(text[i])) name += text[i++];
      if (i >= text.size() || text[i] != '>' || stack.empty() || stack.back() != name) return std::nullopt;
      stack.pop_back();
      ++i;
      if (stack.empty()) root_closed = true;
      continue;
    }
    if (root_closed && stack.empty()) return std::nullopt;
    XmlElement el;
    while (i < text.size() && is_name(text[i])) el.name += text[i++];
    if (el.name.empty()) return std::nullopt;
    for (;;) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size()) return std::nullopt;
      if (text[i] == '/' || text[i] == '>') break;
      std::string key;
      while (i < text.size() && is_name(text[i])) key += text[i++];
      if (key.empty() || i + 1 >= text.size() || text[i] != '=' || text[i + 1] != '"') return std::nullopt;
      i += 2;
      const auto close = text.find('"', i);
      if (close == std::string_view::npos) return std::nullopt;
      const std::string value(text.substr(i, close - i));
      if (value.find('<') != std::string::npos) return std::nullopt;
      if (!el.attributes.emplace(key, value).second) return std::nullopt;
      i = close + 1;
    }
    const bool self_closing = text[i] == '/';
    if (self_closing) {
      if (i + 1 >= text.size() || text[i + 1] != '>') return std::nullopt;
      i += 2;
    } else {
      ++i;
    }
    if (!self_closing) stack.push_back(el.name);
    else if (stack.empty()) root_closed = true;
    elements.push_back(std::move(el));
  }
  if (!stack.empty() || !root_closed) return std::nullopt;
  return elements;
}

}  // namespace oracle
