#pragma once

#include <cstddef>

#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/random.hpp"

namespace chromatica::generators {

/// Erdos-Renyi G(n, p). Pairs (i, j), i < j, are visited in lexicographic
/// order and each consumes exactly one Rng::uniform() draw; the pair is an
/// edge when the draw is below p.
Graph gnp(std::size_t n, double p, Seed seed);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// Hub node 0 joined to a rim cycle on nodes 1..n-1; requires n >= 4.
Graph wheel(std::size_t n);
Graph path(std::size_t n);
/// Star K_{1,leaves} with centre 0.
Graph star(std::size_t leaves);

struct TreeLayout {
  double branch_angle_degrees = 80.0;
  double length_decay = 0.67;
};

/// Complete binary tree truncated to node_count nodes in heap order
/// (children of i are 2i+1 and 2i+2). The root sits at the origin and its
/// first edges point down; each child turns by +/- branch angle from its
/// parent's direction and its edge is length_decay times as long.
EmbeddedGraph binary_tree(std::size_t node_count, const TreeLayout& layout = {});

/// rows x cols unit cells; node (r, c) has index r*(cols+1)+c at (c, r).
EmbeddedGraph square_lattice(std::size_t rows, std::size_t cols);

/// rows x cols rhombic cells of a sheared square grid, each split by its
/// short diagonal into two equilateral triangles.
EmbeddedGraph triangular_lattice(std::size_t rows, std::size_t cols);

/// Honeycomb with rows x cols hexagonal cells, laid out in columns of
/// zig-zag chains.
EmbeddedGraph hexagonal_lattice(std::size_t rows, std::size_t cols);

/// Sierpinski triangle graph after `level` subdivisions:
/// n = 3(3^level + 1)/2 nodes and m = 3^(level+1) edges.
EmbeddedGraph sierpinski(std::size_t level);

/// Dodecahedral graph drawn as a Schlegel diagram: outer pentagon 0..4,
/// middle ten-cycle 5..14, inner pentagon 15..19.
EmbeddedGraph dodecahedral();

}  // namespace chromatica::generators
