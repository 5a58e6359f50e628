#include "chromatica/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chromatica/error.hpp"

namespace chromatica {
namespace {

constexpr double kEps = 1e-12;

int orientation(Point a, Point b, Point c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > kEps) - (v < -kEps);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) - kEps <= p.x && p.x <= std::max(a.x, b.x) + kEps &&
         std::min(a.y, b.y) - kEps <= p.y && p.y <= std::max(a.y, b.y) + kEps;
}

}  // namespace

double signed_area2(std::span<const Point> polygon) {
  double sum = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

bool segments_cross(Point a, Point b, Point c, Point d) {
  const bool share_endpoint = a == c || a == d || b == c || b == d;
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (share_endpoint) {
    // Adjacent segments only conflict when they overlap along a line.
    if (o1 == 0 && o2 == 0) {
      const Point shared = (a == c || a == d) ? a : b;
      const Point p = (shared == a) ? b : a;
      const Point q = (shared == c) ? d : c;
      const double dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
      return dot > 0;
    }
    return false;
  }
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

std::size_t count_crossings(const EmbeddedGraph& eg) {
  const auto edges = eg.graph.edges();
  const auto& pos = eg.coordinates;
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point a = pos[static_cast<std::size_t>(edges[i].u)];
    const Point b = pos[static_cast<std::size_t>(edges[i].v)];
    const double lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
    const double lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Point c = pos[static_cast<std::size_t>(edges[j].u)];
      const Point d = pos[static_cast<std::size_t>(edges[j].v)];
      if (std::max(c.x, d.x) < lo_x - kEps || std::min(c.x, d.x) > hi_x + kEps ||
          std::max(c.y, d.y) < lo_y - kEps || std::min(c.y, d.y) > hi_y + kEps) {
        continue;
      }
      if (segments_cross(a, b, c, d)) ++crossings;
    }
  }
  return crossings;
}

void validate_coordinates(const Graph& g, std::span<const Point> coordinates) {
  if (coordinates.size() != g.node_count()) {
    throw InvalidArgument("expected " + std::to_string(g.node_count()) + " coordinates, got " +
                          std::to_string(coordinates.size()));
  }
  std::vector<std::pair<Point, std::size_t>> sorted;
  sorted.reserve(coordinates.size());
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (!std::isfinite(coordinates[i].x) || !std::isfinite(coordinates[i].y)) {
      throw InvalidArgument("node " + std::to_string(i) + " has a non-finite coordinate");
    }
    sorted.emplace_back(coordinates[i], i);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    return l.first.x != r.first.x ? l.first.x < r.first.x : l.first.y < r.first.y;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      throw InvalidArgument("nodes " + std::to_string(sorted[i - 1].second) + " and " +
                            std::to_string(sorted[i].second) + " have coincident coordinates");
    }
  }
}

}  // namespace chromatica
