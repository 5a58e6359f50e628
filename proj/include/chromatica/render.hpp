#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromatica/colouring.hpp"
#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/random.hpp"
#include "chromatica/transforms.hpp"

namespace chromatica::render {

enum class LayoutStyle { Spring, Circular, Multipartite, Provided };

std::string_view to_string(LayoutStyle style);
std::optional<LayoutStyle> parse_layout_style(std::string_view text);

struct Layout {
  std::vector<Point> positions;
  LayoutStyle style = LayoutStyle::Provided;
};

/// Fill colours indexed by label, cycling past the end.
class Palette {
 public:
  explicit Palette(std::vector<std::string> colours);

  /// Tableau 10 (matplotlib "tab10").
  static Palette tableau10();

  const std::string& operator[](std::size_t label) const { return colours_[label % colours_.size()]; }
  std::size_t size() const noexcept { return colours_.size(); }

 private:
  std::vector<std::string> colours_;
};

/// Fruchterman-Reingold constants. The ideal edge length is
/// sqrt(1 / n) on a unit-area frame; the step cap cools linearly from
/// initial_temperature to zero.
struct SpringParams {
  std::size_t iterations = 200;
  double initial_temperature = 0.1;
};

/// Force-directed layout: nodes repel with k^2/d and edges attract with
/// d^2/k. Initial positions are drawn uniformly from [0.25, 0.75]^2; the
/// result is scaled (aspect preserved) and centred into the unit square.
Layout spring_layout(const Graph& g, Seed seed, const SpringParams& params = {});

/// Nodes sorted by (label, index) at equal angular steps on the unit circle.
/// Throws InvalidArgument unless the colouring is a node colouring of g.
Layout circular_grouped_layout(const Graph& g, const Colouring& colouring);

/// Colour class c becomes column x = c; within a column nodes are stacked by
/// index, centred on y = 0.
Layout multipartite_layout(const Graph& g, const Colouring& colouring);

struct SvgOptions {
  double width = 600.0;
  double height = 600.0;
  double margin = 20.0;
  double node_radius = 5.0;
  double edge_width = 1.5;
  bool show_nodes = true;
  bool show_unbounded = true;
  Palette palette = Palette::tableau10();
  std::string edge_colour = "#404040";
  std::string node_outline = "#000000";
  std::string plain_node_fill = "#ffffff";
};

/// What to draw. Every colouring is optional; a face colouring needs faces
/// plus coordinates. Positions are in layout units and get fitted to the
/// canvas with y pointing up.
struct Scene {
  const Graph* graph = nullptr;
  std::span<const Point> positions;
  const Colouring* node_colouring = nullptr;
  const Colouring* edge_colouring = nullptr;
  const Colouring* face_colouring = nullptr;
  const FaceSet* faces = nullptr;
  std::size_t unbounded_face = 0;
};

/// SVG 1.1 document. Faces are filled polygons drawn largest first, the
/// unbounded face is a background rectangle, then edges, then nodes.
/// Identical inputs give byte-identical output.
std::string render_svg(const Scene& scene, const SvgOptions& options = {});

/// Graphviz DOT with colour attributes taken from the palette.
std::string write_dot(const Graph& g, const Colouring* node_colouring = nullptr,
                      const Colouring* edge_colouring = nullptr, const Palette& palette = Palette::tableau10());

}  // namespace chromatica::render
