#include "chromatica/generators.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "chromatica/error.hpp"

namespace chromatica::generators {
namespace {

Node as_node(std::size_t i) { return static_cast<Node>(i); }

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace

Graph gnp(std::size_t n, double p, Seed seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1], got " + std::to_string(p));
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.push_back({as_node(i), as_node(j)});
    }
  }
  return build_graph(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least one node");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({as_node(i), as_node(j)});
  return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 nodes, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({as_node(i), as_node((i + 1) % n)});
  return build_graph(n, edges);
}

Graph wheel(std::size_t n) {
  require(n >= 4, "wheel needs a hub plus at least 3 rim nodes, got n=" + std::to_string(n));
  std::vector<Edge> edges;
  const std::size_t rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.push_back({0, as_node(1 + i)});
    edges.push_back({as_node(1 + i), as_node(1 + (i + 1) % rim)});
  }
  return build_graph(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs at least one node");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({as_node(i), as_node(i + 1)});
  return build_graph(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, as_node(i)});
  return build_graph(leaves + 1, edges);
}

EmbeddedGraph binary_tree(std::size_t node_count, const TreeLayout& layout) {
  require(node_count >= 1, "binary tree needs at least one node");
  const double turn = layout.branch_angle_degrees * std::numbers::pi / 180.0;
  std::vector<Edge> edges;
  std::vector<Point> pos(node_count);
  std::vector<double> heading(node_count, -std::numbers::pi / 2);
  std::vector<double> length(node_count, 1.0 / layout.length_decay);
  for (std::size_t i = 0; i < node_count; ++i) {
    const std::size_t children[2] = {2 * i + 1, 2 * i + 2};
    for (int side = 0; side < 2; ++side) {
      const std::size_t c = children[side];
      if (c >= node_count) continue;
      // root's children share the root's edge length, deeper levels decay
      const double len = (i == 0) ? 1.0 : length[i] * layout.length_decay;
      const double dir = heading[i] + (side == 0 ? turn : -turn);
      pos[c] = {pos[i].x + len * std::cos(dir), pos[i].y + len * std::sin(dir)};
      heading[c] = dir;
      length[c] = len;
      edges.push_back({as_node(i), as_node(c)});
    }
  }
  return {build_graph(node_count, edges), std::move(pos)};
}

EmbeddedGraph square_lattice(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "lattice needs at least one row and one column of cells");
  const std::size_t width = cols + 1;
  const auto id = [&](std::size_t r, std::size_t c) { return as_node(r * width + c); };
  std::vector<Edge> edges;
  std::vector<Point> pos;
  for (std::size_t r = 0; r <= rows; ++r) {
    for (std::size_t c = 0; c <= cols; ++c) {
      pos.push_back({static_cast<double>(c), static_cast<double>(r)});
      if (c < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return {build_graph((rows + 1) * width, edges), std::move(pos)};
}

EmbeddedGraph triangular_lattice(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "lattice needs at least one row and one column of cells");
  const std::size_t width = cols + 1;
  const double h = std::sqrt(3.0) / 2.0;
  const auto id = [&](std::size_t r, std::size_t c) { return as_node(r * width + c); };
  std::vector<Edge> edges;
  std::vector<Point> pos;
  for (std::size_t r = 0; r <= rows; ++r) {
    for (std::size_t c = 0; c <= cols; ++c) {
      pos.push_back({static_cast<double>(c) + 0.5 * static_cast<double>(r), h * static_cast<double>(r)});
      if (c < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r < rows) edges.push_back({id(r, c), id(r + 1, c)});
      if (r < rows && c < cols) edges.push_back({id(r, c + 1), id(r + 1, c)});
    }
  }
  return {build_graph((rows + 1) * width, edges), std::move(pos)};
}

EmbeddedGraph hexagonal_lattice(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "lattice needs at least one row and one column of cells");
  // Columns i = 0..cols of vertical zig-zag chains j = 0..2*rows+1; rungs
  // join (i, j)-(i+1, j) when i and j have equal parity. The two corner
  // nodes that would otherwise hang off a single edge are dropped.
  const std::size_t chain = 2 * rows + 2;
  const auto dropped = [&](std::size_t i, std::size_t j) {
    return (i == 0 && j == chain - 1) || (i == cols && j == (cols % 2 == 1 ? chain - 1 : 0));
  };
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<int> index((cols + 1) * chain, -1);
  std::vector<Point> pos;
  for (std::size_t i = 0; i <= cols; ++i) {
    for (std::size_t j = 0; j < chain; ++j) {
      if (dropped(i, j)) continue;
      index[i * chain + j] = static_cast<int>(pos.size());
      const double x = 0.5 + static_cast<double>(i + i / 2) +
                       static_cast<double>(j % 2) * (static_cast<double>(i % 2) - 0.5);
      pos.push_back({x, h * static_cast<double>(j)});
    }
  }
  std::vector<Edge> edges;
  const auto link = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    const int a = index[i1 * chain + j1];
    const int b = index[i2 * chain + j2];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  };
  for (std::size_t i = 0; i <= cols; ++i) {
    for (std::size_t j = 0; j + 1 < chain; ++j) link(i, j, i, j + 1);
  }
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < chain; ++j) {
      if (i % 2 == j % 2) link(i, j, i + 1, j);
    }
  }
  return {build_graph(pos.size(), edges), std::move(pos)};
}

EmbeddedGraph sierpinski(std::size_t level) {
  require(level >= 1, "Sierpinski level must be at least 1");
  require(level <= 12, "Sierpinski level above 12 is too large");
  // Points live on the integer triangular lattice a*(1,0) + b*(1/2, sqrt3/2),
  // so shared corners deduplicate exactly.
  using Key = std::pair<long, long>;
  std::map<Key, Node> ids;
  std::vector<Point> pos;
  std::vector<Edge> edges;
  const double h = std::sqrt(3.0) / 2.0;
  const auto node = [&](Key k) {
    auto [it, inserted] = ids.try_emplace(k, static_cast<Node>(pos.size()));
    if (inserted) {
      pos.push_back({static_cast<double>(k.first) + 0.5 * static_cast<double>(k.second),
                     h * static_cast<double>(k.second)});
    }
    return it->second;
  };
  const auto mid = [](Key p, Key q) { return Key{(p.first + q.first) / 2, (p.second + q.second) / 2}; };

  const auto subdivide = [&](auto&& self, Key a, Key b, Key c, std::size_t depth) -> void {
    if (depth == 0) {
      const Node na = node(a), nb = node(b), nc = node(c);
      edges.push_back({na, nb});
      edges.push_back({nb, nc});
      edges.push_back({nc, na});
      return;
    }
    const Key ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    self(self, a, ab, ca, depth - 1);
    self(self, ab, b, bc, depth - 1);
    self(self, ca, bc, c, depth - 1);
  };
  const long side = 1L << level;
  subdivide(subdivide, Key{0, 0}, Key{side, 0}, Key{0, side}, level);
  return {build_graph(pos.size(), edges), std::move(pos)};
}

EmbeddedGraph dodecahedral() {
  std::vector<Edge> edges;
  std::vector<Point> pos(20);
  const auto at = [](double radius, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    return Point{radius * std::cos(t), radius * std::sin(t)};
  };
  for (int i = 0; i < 5; ++i) {
    const double angle = 90.0 + 72.0 * i;
    pos[static_cast<std::size_t>(i)] = at(3.0, angle);                 // outer
    pos[static_cast<std::size_t>(5 + 2 * i)] = at(2.0, angle);         // middle, under outer
    pos[static_cast<std::size_t>(6 + 2 * i)] = at(2.0, angle + 36.0);  // middle, between
    pos[static_cast<std::size_t>(15 + i)] = at(1.0, angle + 36.0);     // inner
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, 5 + 2 * i});
    edges.push_back({6 + 2 * i, 15 + i});
    edges.push_back({15 + i, 15 + (i + 1) % 5});
  }
  for (int j = 0; j < 10; ++j) edges.push_back({5 + j, 5 + (j + 1) % 10});
  return {build_graph(20, edges), std::move(pos)};
}

}  // namespace chromatica::generators
