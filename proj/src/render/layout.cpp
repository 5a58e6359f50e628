#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "chromatica/error.hpp"
#include "chromatica/render.hpp"

namespace chromatica::render {
namespace {

void require_node_colouring(const Graph& g, const Colouring& colouring) {
  if (colouring.kind != ElementKind::Node) {
    throw InvalidArgument("this layout needs a node colouring, got a " + std::string(to_string(colouring.kind)) +
                          " colouring");
  }
  if (colouring.labels.size() != g.node_count()) {
    throw InvalidArgument("colouring has " + std::to_string(colouring.labels.size()) + " labels for " +
                          std::to_string(g.node_count()) + " nodes");
  }
}

void fit_unit_square(std::vector<Point>& pos) {
  if (pos.empty()) return;
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const Point& p : pos) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0 ? 1.0 / span : 0.0;
  const double off_x = 0.5 - 0.5 * (max_x - min_x) * scale;
  const double off_y = 0.5 - 0.5 * (max_y - min_y) * scale;
  for (Point& p : pos) p = {off_x + (p.x - min_x) * scale, off_y + (p.y - min_y) * scale};
}

}  // namespace

std::string_view to_string(LayoutStyle style) {
  switch (style) {
    case LayoutStyle::Spring: return "spring";
    case LayoutStyle::Circular: return "circular";
    case LayoutStyle::Multipartite: return "multipartite";
    case LayoutStyle::Provided: return "provided";
  }
  return "provided";
}

std::optional<LayoutStyle> parse_layout_style(std::string_view text) {
  if (text == "spring") return LayoutStyle::Spring;
  if (text == "circular" || text == "circle") return LayoutStyle::Circular;
  if (text == "multipartite") return LayoutStyle::Multipartite;
  if (text == "provided") return LayoutStyle::Provided;
  return std::nullopt;
}

Palette::Palette(std::vector<std::string> colours) : colours_(std::move(colours)) {
  if (colours_.empty()) throw InvalidArgument("palette needs at least one colour");
  for (std::size_t i = 0; i < colours_.size(); ++i) {
    for (std::size_t j = i + 1; j < colours_.size(); ++j) {
      if (colours_[i] == colours_[j]) throw InvalidArgument("palette repeats colour " + colours_[i]);
    }
  }
}

Palette Palette::tableau10() {
  return Palette({"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
                  "#17becf"});
}

Layout spring_layout(const Graph& g, Seed seed, const SpringParams& params) {
  const auto n = g.node_count();
  Layout layout{std::vector<Point>(n), LayoutStyle::Spring};
  if (n == 0) return layout;
  if (n == 1) {
    layout.positions[0] = {0.5, 0.5};
    return layout;
  }
  Rng rng(seed);
  auto& pos = layout.positions;
  for (auto& p : pos) {
    p.x = 0.25 + 0.5 * rng.uniform();
    p.y = 0.25 + 0.5 * rng.uniform();
  }
  const double k = std::sqrt(1.0 / static_cast<double>(n));
  const double k2 = k * k;
  std::vector<Point> shift(n);
  for (std::size_t it = 0; it < params.iterations; ++it) {
    const double temperature =
        params.initial_temperature * (1.0 - static_cast<double>(it) / static_cast<double>(params.iterations));
    std::fill(shift.begin(), shift.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[i].x - pos[j].x;
        double dy = pos[i].y - pos[j].y;
        double d = std::hypot(dx, dy);
        if (d < 1e-9) {
          // coincident nodes: separate along a fixed index-dependent direction
          const double angle = static_cast<double>((i * 7 + j * 13) % 360) * std::numbers::pi / 180.0;
          dx = 1e-9 * std::cos(angle);
          dy = 1e-9 * std::sin(angle);
          d = 1e-9;
        }
        const double force = k2 / d;
        const double fx = dx / d * force, fy = dy / d * force;
        shift[i].x += fx;
        shift[i].y += fy;
        shift[j].x -= fx;
        shift[j].y -= fy;
      }
    }
    for (const Edge& e : g.edges()) {
      const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
      const double dx = pos[u].x - pos[v].x;
      const double dy = pos[u].y - pos[v].y;
      const double d = std::hypot(dx, dy);
      if (d < 1e-12) continue;
      const double force = d * d / k;
      const double fx = dx / d * force, fy = dy / d * force;
      shift[u].x -= fx;
      shift[u].y -= fy;
      shift[v].x += fx;
      shift[v].y += fy;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double length = std::hypot(shift[i].x, shift[i].y);
      if (length < 1e-12) continue;
      const double step = std::min(length, temperature);
      pos[i].x += shift[i].x / length * step;
      pos[i].y += shift[i].y / length * step;
    }
  }
  fit_unit_square(pos);
  return layout;
}

Layout circular_grouped_layout(const Graph& g, const Colouring& colouring) {
  require_node_colouring(g, colouring);
  const auto n = g.node_count();
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) {
    return colouring.labels[static_cast<std::size_t>(a)] < colouring.labels[static_cast<std::size_t>(b)];
  });
  Layout layout{std::vector<Point>(n), LayoutStyle::Circular};
  for (std::size_t slot = 0; slot < n; ++slot) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(slot) / static_cast<double>(n);
    layout.positions[static_cast<std::size_t>(order[slot])] = {std::cos(angle), std::sin(angle)};
  }
  return layout;
}

Layout multipartite_layout(const Graph& g, const Colouring& colouring) {
  require_node_colouring(g, colouring);
  const auto n = g.node_count();
  std::vector<std::size_t> class_size;
  for (Label l : colouring.labels) {
    if (static_cast<std::size_t>(l) >= class_size.size()) class_size.resize(static_cast<std::size_t>(l) + 1, 0);
    ++class_size[static_cast<std::size_t>(l)];
  }
  std::vector<std::size_t> filled(class_size.size(), 0);
  Layout layout{std::vector<Point>(n), LayoutStyle::Multipartite};
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = static_cast<std::size_t>(colouring.labels[v]);
    const double rank = static_cast<double>(filled[c]++);
    const double centre = 0.5 * static_cast<double>(class_size[c] - 1);
    layout.positions[v] = {static_cast<double>(c), centre - rank};
  }
  return layout;
}

}  // namespace chromatica::render
