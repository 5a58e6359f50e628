#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "chromatica/error.hpp"
#include "chromatica/render.hpp"

namespace chromatica::render {
namespace {

void check_colouring(const Colouring* c, ElementKind kind, std::size_t count, const char* what) {
  if (c == nullptr) return;
  if (c->kind != kind) {
    throw InvalidArgument(fmt::format("{} colouring slot holds a {} colouring", what, to_string(c->kind)));
  }
  if (c->labels.size() != count) {
    throw InvalidArgument(fmt::format("{} colouring has {} labels for {} elements", what, c->labels.size(), count));
  }
  for (Label l : c->labels) {
    if (l < 0) throw InvalidArgument(fmt::format("{} colouring has negative label {}", what, l));
  }
}

// Maps layout units onto the canvas, uniformly scaled, y up.
struct Viewport {
  double scale = 1.0;
  double cx = 0.0, cy = 0.0;
  double half_w = 0.0, half_h = 0.0;

  Viewport(std::span<const Point> pos, const SvgOptions& o) : half_w(o.width / 2), half_h(o.height / 2) {
    if (pos.empty()) return;
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = -min_x;
    for (const Point& p : pos) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    cx = (min_x + max_x) / 2;
    cy = (min_y + max_y) / 2;
    const double avail_w = std::max(o.width - 2 * o.margin, 1.0);
    const double avail_h = std::max(o.height - 2 * o.margin, 1.0);
    const double sx = max_x > min_x ? avail_w / (max_x - min_x) : std::numeric_limits<double>::infinity();
    const double sy = max_y > min_y ? avail_h / (max_y - min_y) : std::numeric_limits<double>::infinity();
    scale = std::min(sx, sy);
    if (!std::isfinite(scale)) scale = 1.0;
  }

  double x(const Point& p) const { return half_w + (p.x - cx) * scale; }
  double y(const Point& p) const { return half_h - (p.y - cy) * scale; }
};

}  // namespace

std::string render_svg(const Scene& scene, const SvgOptions& options) {
  if (scene.graph == nullptr) throw InvalidArgument("render_svg needs a graph");
  const Graph& g = *scene.graph;
  if (!(options.width > 0) || !(options.height > 0) || !std::isfinite(options.width) ||
      !std::isfinite(options.height)) {
    throw InvalidArgument("canvas size must be positive");
  }
  if (!(options.edge_width >= 0) || !(options.node_radius >= 0)) {
    throw InvalidArgument("stroke width and node radius must be non-negative");
  }
  if (scene.positions.size() != g.node_count()) {
    throw InvalidArgument(
        fmt::format("layout has {} positions for {} nodes", scene.positions.size(), g.node_count()));
  }
  for (const Point& p : scene.positions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidArgument("layout has a non-finite coordinate");
  }
  check_colouring(scene.node_colouring, ElementKind::Node, g.node_count(), "node");
  check_colouring(scene.edge_colouring, ElementKind::Edge, g.edge_count(), "edge");
  if (scene.face_colouring != nullptr) {
    if (scene.faces == nullptr) throw InvalidArgument("face rendering needs an embedding with traced faces");
    check_colouring(scene.face_colouring, ElementKind::Face, scene.faces->face_count(), "face");
    if (scene.unbounded_face >= scene.faces->face_count()) throw InvalidArgument("unbounded face index out of range");
  }

  const Viewport vp(scene.positions, options);
  const Palette& palette = options.palette;
  std::string out;
  auto put = std::back_inserter(out);

  fmt::format_to(put, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  fmt::format_to(put,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.3f}\" height=\"{1:.3f}\" "
                 "viewBox=\"0 0 {0:.3f} {1:.3f}\">\n",
                 options.width, options.height);

  if (scene.face_colouring != nullptr) {
    const auto& labels = scene.face_colouring->labels;
    const auto& faces = scene.faces->faces;
    if (options.show_unbounded) {
      fmt::format_to(put,
                     "<rect class=\"unbounded\" x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n",
                     options.width, options.height,
                     palette[static_cast<std::size_t>(labels[scene.unbounded_face])]);
    }
    std::vector<std::vector<Point>> polygons(faces.size());
    std::vector<double> area(faces.size(), 0.0);
    std::vector<std::size_t> order;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (f == scene.unbounded_face) continue;
      polygons[f] = face_polygon(faces[f], scene.positions);
      area[f] = std::abs(signed_area2(polygons[f]));
      order.push_back(f);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return area[a] > area[b]; });
    out += "<g class=\"faces\" stroke=\"none\" fill-rule=\"nonzero\">\n";
    for (std::size_t f : order) {
      out += "<polygon class=\"face\" points=\"";
      for (std::size_t i = 0; i < polygons[f].size(); ++i) {
        if (i > 0) out += ' ';
        fmt::format_to(put, "{:.3f},{:.3f}", vp.x(polygons[f][i]), vp.y(polygons[f][i]));
      }
      fmt::format_to(put, "\" fill=\"{}\"/>\n", palette[static_cast<std::size_t>(labels[f])]);
    }
    out += "</g>\n";
  }

  fmt::format_to(put, "<g class=\"edges\" stroke-width=\"{:.3f}\" stroke-linecap=\"round\">\n", options.edge_width);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point& a = scene.positions[static_cast<std::size_t>(edges[i].u)];
    const Point& b = scene.positions[static_cast<std::size_t>(edges[i].v)];
    const std::string& stroke = scene.edge_colouring != nullptr
                                    ? palette[static_cast<std::size_t>(scene.edge_colouring->labels[i])]
                                    : options.edge_colour;
    fmt::format_to(put, "<line class=\"edge\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"{}\"/>\n",
                   vp.x(a), vp.y(a), vp.x(b), vp.y(b), stroke);
  }
  out += "</g>\n";

  if (options.show_nodes) {
    fmt::format_to(put, "<g class=\"nodes\" stroke=\"{}\" stroke-width=\"1\">\n", options.node_outline);
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      const Point& p = scene.positions[v];
      const std::string& fill = scene.node_colouring != nullptr
                                    ? palette[static_cast<std::size_t>(scene.node_colouring->labels[v])]
                                    : options.plain_node_fill;
      fmt::format_to(put, "<circle class=\"node\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"{}\"/>\n", vp.x(p),
                     vp.y(p), options.node_radius, fill);
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string write_dot(const Graph& g, const Colouring* node_colouring, const Colouring* edge_colouring,
                      const Palette& palette) {
  check_colouring(node_colouring, ElementKind::Node, g.node_count(), "node");
  check_colouring(edge_colouring, ElementKind::Edge, g.edge_count(), "edge");
  std::string out = "graph G {\n";
  auto put = std::back_inserter(out);
  if (node_colouring != nullptr) out += "  node [style=filled];\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (node_colouring != nullptr) {
      const auto label = node_colouring->labels[v];
      fmt::format_to(put, "  {} [colour={}, fillcolor=\"{}\"];\n", v, label,
                     palette[static_cast<std::size_t>(label)]);
    } else {
      fmt::format_to(put, "  {};\n", v);
    }
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_colouring != nullptr) {
      const auto label = edge_colouring->labels[i];
      fmt::format_to(put, "  {} -- {} [colour={}, color=\"{}\"];\n", edges[i].u, edges[i].v, label,
                     palette[static_cast<std::size_t>(label)]);
    } else {
      fmt::format_to(put, "  {} -- {};\n", edges[i].u, edges[i].v);
    }
  }
  out += "}\n";
  return out;
}

}  // namespace chromatica::render
