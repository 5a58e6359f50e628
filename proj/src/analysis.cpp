#include "chromatica/analysis.hpp"

#include <algorithm>
#include <string>

#include "chromatica/error.hpp"

namespace chromatica {
namespace {

void check_size(std::size_t labels, std::size_t elements, const char* what) {
  if (labels != elements) {
    throw InvalidArgument(std::string("colouring has ") + std::to_string(labels) + " labels but the graph has " +
                          std::to_string(elements) + " " + what);
  }
}

VerificationReport finish(std::vector<Clash> clashes, std::span<const Label> labels) {
  std::sort(clashes.begin(), clashes.end());
  clashes.erase(std::unique(clashes.begin(), clashes.end()), clashes.end());
  VerificationReport report;
  report.valid = clashes.empty();
  report.clashes = std::move(clashes);
  std::vector<Label> distinct(labels.begin(), labels.end());
  std::sort(distinct.begin(), distinct.end());
  report.k = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  return report;
}

Clash ordered(std::size_t a, std::size_t b) { return a < b ? Clash{a, b} : Clash{b, a}; }

}  // namespace

VerificationReport verify_nodes(const Graph& g, std::span<const Label> labels) {
  check_size(labels.size(), g.node_count(), "nodes");
  std::vector<Clash> clashes;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (labels[u] == labels[v]) clashes.push_back({u, v});
  }
  return finish(std::move(clashes), labels);
}

VerificationReport verify_edges(const Graph& g, std::span<const Label> labels) {
  check_size(labels.size(), g.edge_count(), "edges");
  std::vector<Clash> clashes;
  std::vector<std::size_t> incident;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    incident.clear();
    for (Node w : g.neighbours(static_cast<Node>(v))) incident.push_back(*g.edge_index(static_cast<Node>(v), w));
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        if (labels[incident[i]] == labels[incident[j]]) clashes.push_back(ordered(incident[i], incident[j]));
      }
    }
  }
  return finish(std::move(clashes), labels);
}

VerificationReport verify_faces(const Graph& g, const FaceSet& faces, std::span<const Label> labels) {
  check_size(labels.size(), faces.face_count(), "faces");
  // face on the left of each dart, looked up by (from, to)
  std::vector<std::pair<std::pair<Node, Node>, std::size_t>> side;
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    for (const Dart& d : faces.faces[f]) side.push_back({{d.from, d.to}, f});
  }
  std::sort(side.begin(), side.end());
  const auto face_of = [&](Node a, Node b) -> std::size_t {
    const auto it = std::lower_bound(side.begin(), side.end(), std::pair<std::pair<Node, Node>, std::size_t>{{a, b}, 0});
    if (it == side.end() || it->first != std::pair<Node, Node>{a, b}) {
      throw InvalidArgument("face set does not cover edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    return it->second;
  };
  std::vector<Clash> clashes;
  for (const Edge& e : g.edges()) {
    const std::size_t left = face_of(e.u, e.v);
    const std::size_t right = face_of(e.v, e.u);
    if (labels[left] == labels[right]) clashes.push_back(ordered(left, right));
  }
  return finish(std::move(clashes), labels);
}

VerificationReport verify(const Graph& g, const Colouring& colouring, const FaceSet* faces) {
  switch (colouring.kind) {
    case ElementKind::Node: return verify_nodes(g, colouring.labels);
    case ElementKind::Edge: return verify_edges(g, colouring.labels);
    case ElementKind::Face:
      if (faces == nullptr) throw InvalidArgument("face colouring verification needs the traced faces");
      return verify_faces(g, *faces, colouring.labels);
  }
  return {};
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Class1: return "class1";
    case EdgeClass::Class2: return "class2";
    case EdgeClass::Unknown: return "unknown";
  }
  return "unknown";
}

EdgeClass edge_class(const Graph& g, std::optional<std::size_t> certified_chromatic_index) {
  if (!certified_chromatic_index) return EdgeClass::Unknown;
  const std::size_t delta = max_degree(g);
  if (*certified_chromatic_index == delta) return EdgeClass::Class1;
  if (*certified_chromatic_index == delta + 1) return EdgeClass::Class2;
  throw InvalidArgument("chromatic index " + std::to_string(*certified_chromatic_index) +
                        " is outside the Vizing window {" + std::to_string(delta) + ", " + std::to_string(delta + 1) +
                        "}");
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Newton iteration from an upper bound; monotone decreasing to floor(sqrt(x)).
  std::uint64_t r = std::uint64_t{1} << ((64 - __builtin_clzll(x) + 1) / 2);
  while (true) {
    const std::uint64_t next = (r + x / r) / 2;
    if (next >= r) return r;
    r = next;
  }
}

std::uint64_t heawood_bound(std::uint64_t holes) {
  if (holes == 0) throw InvalidArgument("Heawood bound is defined for h >= 1 holes");
  if (holes > (UINT64_MAX - 1) / 48) throw InvalidArgument("hole count too large");
  // floor((7 + s)/2) with s = sqrt(1 + 48h) equals floor((7 + floor(s))/2):
  // the fractional part of s cannot carry past the next half-integer.
  return (7 + isqrt(1 + 48 * holes)) / 2;
}

bool euler_check(std::int64_t n, std::int64_t m, std::int64_t f) { return n - m + f == 2; }

WalkCode encode_walk(const Graph& g, const Colouring& edge_colouring, std::span<const Node> walk) {
  if (edge_colouring.kind != ElementKind::Edge) throw InvalidArgument("walk encoding needs an edge colouring");
  check_size(edge_colouring.labels.size(), g.edge_count(), "edges");
  if (walk.empty()) throw InvalidArgument("a walk needs at least its start node");
  if (walk[0] < 0 || static_cast<std::size_t>(walk[0]) >= g.node_count()) {
    throw InvalidArgument("walk starts outside the graph");
  }
  WalkCode code{walk[0], {}};
  code.colours.reserve(walk.size() - 1);
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const auto e = g.edge_index(walk[i - 1], walk[i]);
    if (!e) {
      throw InvalidArgument("walk steps between non-adjacent nodes " + std::to_string(walk[i - 1]) + " and " +
                            std::to_string(walk[i]));
    }
    code.colours.push_back(edge_colouring.labels[*e]);
  }
  return code;
}

std::vector<Node> decode_walk(const Graph& g, const Colouring& edge_colouring, const WalkCode& code) {
  if (edge_colouring.kind != ElementKind::Edge) throw InvalidArgument("walk decoding needs an edge colouring");
  check_size(edge_colouring.labels.size(), g.edge_count(), "edges");
  if (code.start < 0 || static_cast<std::size_t>(code.start) >= g.node_count()) {
    throw InvalidArgument("walk starts outside the graph");
  }
  std::vector<Node> walk{code.start};
  Node current = code.start;
  for (std::size_t i = 0; i < code.colours.size(); ++i) {
    const Label want = code.colours[i];
    Node next = -1;
    for (Node w : g.neighbours(current)) {
      if (edge_colouring.labels[*g.edge_index(current, w)] == want) {
        next = w;
        break;
      }
    }
    if (next < 0) {
      throw InvalidArgument("walk leaves the graph: no edge of colour " + std::to_string(want) + " at node " +
                            std::to_string(current) + " (step " + std::to_string(i + 1) + ")");
    }
    walk.push_back(next);
    current = next;
  }
  return walk;
}

}  // namespace chromatica
