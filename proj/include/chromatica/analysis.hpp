#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chromatica/colouring.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/transforms.hpp"

namespace chromatica {

/// Two adjacent elements (nodes, edges or faces) sharing a label, first < second.
struct Clash {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const Clash&, const Clash&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Clash> clashes;
  std::size_t k = 0;
};

/// Node colouring check: every edge of g with equal endpoint labels.
VerificationReport verify_nodes(const Graph& g, std::span<const Label> labels);

/// Edge colouring check straight on g: every pair of edges meeting at a
/// node with equal labels. Labels are indexed like g.edges().
VerificationReport verify_edges(const Graph& g, std::span<const Label> labels);

/// Face colouring check straight on the traced faces: every pair of faces
/// on the two sides of some edge with equal labels.
VerificationReport verify_faces(const Graph& g, const FaceSet& faces, std::span<const Label> labels);

/// Dispatches on the colouring's kind. Face colourings need `faces`.
/// Throws InvalidArgument when the label count does not match the elements.
VerificationReport verify(const Graph& g, const Colouring& colouring, const FaceSet* faces = nullptr);

enum class EdgeClass { Class1, Class2, Unknown };

std::string_view to_string(EdgeClass c);

/// Class 1 when the certified chromatic index equals max degree, Class 2
/// when it is one more, Unknown without a certified value. Any other value
/// throws InvalidArgument (it contradicts Vizing's theorem).
EdgeClass edge_class(const Graph& g, std::optional<std::size_t> certified_chromatic_index);

/// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t x);

/// Heawood's bound floor((7 + sqrt(1 + 48h)) / 2) for an h-holed torus,
/// h >= 1, in integer arithmetic.
std::uint64_t heawood_bound(std::uint64_t holes);

/// n - m + f == 2.
bool euler_check(std::int64_t n, std::int64_t m, std::int64_t f);

/// A walk written as its start node plus the colour of every edge taken.
struct WalkCode {
  Node start = 0;
  std::vector<Label> colours;

  friend bool operator==(const WalkCode&, const WalkCode&) = default;
};

/// Throws InvalidArgument on an empty walk, non-adjacent consecutive nodes,
/// or a colouring that is not an edge colouring of g.
WalkCode encode_walk(const Graph& g, const Colouring& edge_colouring, std::span<const Node> walk);

/// Replays a code by following, from each node, the unique incident edge
/// with the next colour. Throws InvalidArgument("walk leaves the graph")
/// when no incident edge has that colour.
std::vector<Node> decode_walk(const Graph& g, const Colouring& edge_colouring, const WalkCode& code);

}  // namespace chromatica
