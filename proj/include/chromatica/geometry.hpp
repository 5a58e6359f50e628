#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chromatica/graph.hpp"

namespace chromatica {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A graph together with a straight-line drawing.
struct EmbeddedGraph {
  Graph graph;
  std::vector<Point> coordinates;
};

/// Twice the signed area of a closed polygon; positive when counterclockwise.
double signed_area2(std::span<const Point> polygon);

/// True when the closed segments ab and cd intersect anywhere other than
/// at an endpoint they share.
bool segments_cross(Point a, Point b, Point c, Point d);

/// Number of edge pairs whose straight-line drawings cross. Exhaustive,
/// O(m^2): meant for checking drawings at test sizes.
std::size_t count_crossings(const EmbeddedGraph& eg);

/// Throws InvalidArgument unless there is one finite coordinate per node
/// and no two nodes share a position.
void validate_coordinates(const Graph& g, std::span<const Point> coordinates);

}  // namespace chromatica
