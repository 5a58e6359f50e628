#include <algorithm>
#include <numeric>
#include <string>

#include "chromatica/colouring.hpp"

namespace chromatica {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Greedy: return "greedy";
    case Algorithm::DSatur: return "dsatur";
    case Algorithm::Backtracking: return "backtracking";
    case Algorithm::Hea: return "hea";
  }
  return "dsatur";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "greedy") return Algorithm::Greedy;
  if (text == "dsatur") return Algorithm::DSatur;
  if (text == "backtracking" || text == "exact") return Algorithm::Backtracking;
  if (text == "hea") return Algorithm::Hea;
  return std::nullopt;
}

ColourResult colour_nodes(const Graph& g, Algorithm algorithm, const ColourOptions& options) {
  switch (algorithm) {
    case Algorithm::Backtracking: return backtracking_colour(g, options.node_limit);
    case Algorithm::Hea: return hea_colour(g, options.hea);
    case Algorithm::Greedy:
    case Algorithm::DSatur: break;
  }
  ColourResult result;
  if (algorithm == Algorithm::Greedy) {
    std::vector<Node> order(g.node_count());
    std::iota(order.begin(), order.end(), 0);
    result.colouring = greedy_colour(g, order);
  } else {
    result.colouring = dsatur_colour(g);
  }
  auto& cert = result.certificate;
  cert.lower_bound = greedy_clique(g).size();
  cert.upper_bound = result.colouring.k;
  cert.optimal = cert.lower_bound == cert.upper_bound;
  return result;
}

ColourResult colour_edges(const Graph& g, Algorithm algorithm, const ColourOptions& options) {
  const LineGraphResult lg = line_graph(g);
  ColourResult result = colour_nodes(lg.line_graph, algorithm, options);
  result.colouring.kind = ElementKind::Edge;
  auto& cert = result.certificate;
  cert.lower_bound = std::max(cert.lower_bound, max_degree(g));
  if (cert.lower_bound == cert.upper_bound) cert.optimal = true;
  return result;
}

FaceColourResult colour_faces(const Graph& g, const RotationSystem& rot, Algorithm algorithm,
                              const ColourOptions& options, std::optional<std::span<const Point>> coordinates) {
  FaceColourResult out;
  out.dual = dual_graph(g, rot, coordinates);
  out.result = colour_nodes(out.dual.dual, algorithm, options);
  out.result.colouring.kind = ElementKind::Face;
  return out;
}

FaceColourResult colour_faces(const EmbeddedGraph& eg, Algorithm algorithm, const ColourOptions& options) {
  const RotationSystem rot = rotation_from_coordinates(eg);
  return colour_faces(eg.graph, rot, algorithm, options, std::span<const Point>(eg.coordinates));
}

}  // namespace chromatica
