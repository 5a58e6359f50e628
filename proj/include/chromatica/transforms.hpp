#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"

namespace chromatica {

struct LineGraphResult {
  Graph line_graph;
  /// Original edge for each line-graph node (same order as g.edges()).
  std::vector<Edge> edge_of_node;
};

/// Cyclic neighbour order per node, counterclockwise.
struct RotationSystem {
  std::vector<std::vector<Node>> rotation;
};

/// One directed edge u -> v of a face walk.
struct Dart {
  Node from = 0;
  Node to = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct FaceSet {
  std::vector<std::vector<Dart>> faces;

  std::size_t face_count() const noexcept { return faces.size(); }
};

struct DualGraphResult {
  Graph dual;
  /// Face index for each dual node. Faces are numbered as traced, so this
  /// is the identity; kept explicit for callers that remap.
  std::vector<std::size_t> face_of_node;
  std::size_t unbounded_face = 0;
  FaceSet faces;
};

/// L(G), nodes in lexicographic edge order of g. Throws StructuralError on
/// an edgeless graph.
LineGraphResult line_graph(const Graph& g);

/// Orders each node's neighbours by counterclockwise angle (atan2, from the
/// negative x axis). Throws InvalidArgument on coincident coordinates.
RotationSystem rotation_from_coordinates(const EmbeddedGraph& eg);

/// Throws InvalidArgument unless rotation[v] is a permutation of g's
/// neighbours of v for every v.
void validate_rotation(const Graph& g, const RotationSystem& rot);

/// Traces face boundaries as orbits of the rule (u, v) -> (v, w), where w
/// immediately precedes u in the counterclockwise rotation at v. With a
/// counterclockwise rotation derived from a drawing, bounded faces come out
/// counterclockwise and the outer face clockwise. Faces are numbered in
/// order of their smallest dart (u, v) lexicographically, and each walk
/// starts at that dart. Throws StructuralError on a disconnected graph.
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

/// Face graph of the embedding with parallel adjacencies collapsed.
///
/// The unbounded face is the face with the most negative signed area when
/// coordinates are supplied, otherwise the longest walk (lowest index on
/// ties). Throws StructuralError when an edge has the same face on both
/// sides (a bridge).
DualGraphResult dual_graph(const Graph& g, const RotationSystem& rot,
                           std::optional<std::span<const Point>> coordinates = std::nullopt);

/// Positions of a face walk's vertices in order.
std::vector<Point> face_polygon(const std::vector<Dart>& face, std::span<const Point> coordinates);

}  // namespace chromatica
