#include "chromatica/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chromatica/error.hpp"

namespace chromatica {
namespace {

/// Dart numbering: dart (v, rotation[v][i]) has id offset[v] + i.
class DartIndex {
 public:
  DartIndex(const Graph& g, const RotationSystem& rot) : rot_(rot) {
    const auto n = g.node_count();
    offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + rot.rotation[v].size();
    // position of each neighbour inside rotation[v], keyed by neighbour id
    slot_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& r = rot.rotation[v];
      auto& s = slot_[v];
      s.reserve(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) s.emplace_back(r[i], i);
      std::sort(s.begin(), s.end());
    }
  }

  std::size_t size() const { return offset_.back(); }

  std::size_t position(Node v, Node neighbour) const {
    const auto& s = slot_[static_cast<std::size_t>(v)];
    const auto it = std::lower_bound(s.begin(), s.end(), std::pair<Node, std::size_t>{neighbour, 0});
    return it->second;
  }

  std::size_t id(Node from, Node to) const { return offset_[static_cast<std::size_t>(from)] + position(from, to); }

  Dart next(Dart d) const {
    const auto& r = rot_.rotation[static_cast<std::size_t>(d.to)];
    const std::size_t p = position(d.to, d.from);
    const Node w = r[(p + r.size() - 1) % r.size()];
    return {d.to, w};
  }

 private:
  const RotationSystem& rot_;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<std::pair<Node, std::size_t>>> slot_;
};

}  // namespace

LineGraphResult line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw StructuralError("no edges to colour: line graph of an edgeless graph is empty");
  std::vector<Edge> edges;
  std::vector<Node> incident;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    incident.clear();
    for (Node w : g.neighbours(static_cast<Node>(v))) {
      incident.push_back(static_cast<Node>(*g.edge_index(static_cast<Node>(v), w)));
    }
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) edges.push_back({incident[i], incident[j]});
  }
  const auto original = g.edges();
  return {build_graph(g.edge_count(), edges), std::vector<Edge>(original.begin(), original.end())};
}

RotationSystem rotation_from_coordinates(const EmbeddedGraph& eg) {
  const auto& g = eg.graph;
  validate_coordinates(g, eg.coordinates);
  RotationSystem rot;
  rot.rotation.resize(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const Point c = eg.coordinates[v];
    std::vector<std::pair<double, Node>> by_angle;
    for (Node w : g.neighbours(static_cast<Node>(v))) {
      const Point p = eg.coordinates[static_cast<std::size_t>(w)];
      by_angle.emplace_back(std::atan2(p.y - c.y, p.x - c.x), w);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, w] : by_angle) rot.rotation[v].push_back(w);
  }
  return rot;
}

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.rotation.size() != g.node_count()) {
    throw InvalidArgument("rotation system has " + std::to_string(rot.rotation.size()) + " entries for " +
                          std::to_string(g.node_count()) + " nodes");
  }
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    std::vector<Node> sorted = rot.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    const auto row = g.neighbours(static_cast<Node>(v));
    if (!std::equal(sorted.begin(), sorted.end(), row.begin(), row.end())) {
      throw InvalidArgument("rotation at node " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  if (!is_connected(g)) throw StructuralError("face tracing needs a connected graph");
  FaceSet result;
  if (g.edge_count() == 0) {
    result.faces.emplace_back();  // the single unbounded face around one node
    return result;
  }
  const DartIndex darts(g, rot);
  std::vector<char> used(darts.size(), 0);
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    for (Node v : g.neighbours(static_cast<Node>(u))) {
      const Dart start{static_cast<Node>(u), v};
      if (used[darts.id(start.from, start.to)]) continue;
      std::vector<Dart> walk;
      Dart d = start;
      do {
        used[darts.id(d.from, d.to)] = 1;
        walk.push_back(d);
        d = darts.next(d);
      } while (!(d == start));
      result.faces.push_back(std::move(walk));
    }
  }
  return result;
}

DualGraphResult dual_graph(const Graph& g, const RotationSystem& rot,
                           std::optional<std::span<const Point>> coordinates) {
  FaceSet faces = trace_faces(g, rot);
  const DartIndex darts(g, rot);
  std::vector<std::size_t> face_of_dart(darts.size(), 0);
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    for (const Dart& d : faces.faces[f]) face_of_dart[darts.id(d.from, d.to)] = f;
  }
  std::vector<Edge> dual_edges;
  for (const Edge& e : g.edges()) {
    const auto a = face_of_dart[darts.id(e.u, e.v)];
    const auto b = face_of_dart[darts.id(e.v, e.u)];
    if (a == b) {
      throw StructuralError("face colouring undefined across a bridge: edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ") has face " + std::to_string(a) + " on both sides");
    }
    dual_edges.push_back({static_cast<Node>(a), static_cast<Node>(b)});
  }

  DualGraphResult result;
  const std::size_t f = faces.face_count();
  result.dual = build_graph(f, dual_edges);
  result.face_of_node.resize(f);
  for (std::size_t i = 0; i < f; ++i) result.face_of_node[i] = i;

  std::size_t unbounded = 0;
  if (coordinates && f > 0) {
    double most_negative = 0.0;
    for (std::size_t i = 0; i < f; ++i) {
      const auto polygon = face_polygon(faces.faces[i], *coordinates);
      const double area = signed_area2(polygon);
      if (i == 0 || area < most_negative) {
        most_negative = area;
        unbounded = i;
      }
    }
  } else {
    for (std::size_t i = 1; i < f; ++i) {
      if (faces.faces[i].size() > faces.faces[unbounded].size()) unbounded = i;
    }
  }
  result.unbounded_face = unbounded;
  result.faces = std::move(faces);
  return result;
}

std::vector<Point> face_polygon(const std::vector<Dart>& face, std::span<const Point> coordinates) {
  std::vector<Point> polygon;
  polygon.reserve(face.size());
  for (const Dart& d : face) polygon.push_back(coordinates[static_cast<std::size_t>(d.from)]);
  return polygon;
}

}  // namespace chromatica
