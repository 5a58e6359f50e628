#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/random.hpp"
#include "chromatica/transforms.hpp"

namespace chromatica {

using Label = int;
using Assignment = std::vector<Label>;

enum class ElementKind { Node, Edge, Face };

std::string_view to_string(ElementKind kind);
std::optional<ElementKind> parse_element_kind(std::string_view text);

struct Provenance {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string parameters;
};

/// A complete colouring. Labels are normalised to first-occurrence order,
/// so they are exactly {0, ..., k-1} and element 0 (if any) has label 0.
struct Colouring {
  Assignment labels;
  std::size_t k = 0;
  ElementKind kind = ElementKind::Node;
  Provenance provenance;
};

struct OptimalityCertificate {
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  bool optimal = false;
  bool search_exhausted = false;
};

struct ColourResult {
  Colouring colouring;
  OptimalityCertificate certificate;
};

/// Relabels by order of first occurrence and returns the number of labels.
std::size_t normalise_labels(Assignment& labels);

Colouring make_colouring(Assignment labels, ElementKind kind, Provenance provenance);

/// Colours nodes in `order`, each with the lowest label unused by its
/// already coloured neighbours. Throws InvalidArgument unless `order` is a
/// permutation of 0..n-1.
Colouring greedy_colour(const Graph& g, std::span<const Node> order);

/// The order in which DSatur selects nodes: maximum saturation degree, then
/// maximum degree among uncoloured nodes, then lowest index.
std::vector<Node> dsatur_order(const Graph& g);

Colouring dsatur_colour(const Graph& g);

/// Exact backtracking. A greedy clique is pre-coloured 0..|C|-1, then nodes
/// are chosen by the DSatur rule and tried against colours in ascending
/// order, shrinking the colour budget each time a complete colouring is
/// found. Stops early when the clique bound is met. With a node limit the
/// best colouring so far is returned once that many search nodes have been
/// expanded, and the certificate reports optimal only if the bound was met.
ColourResult backtracking_colour(const Graph& g, std::optional<std::uint64_t> node_limit = std::nullopt);

struct TabuParams {
  double tenure_scale = 0.6;
  int tenure_jitter = 9;
};

struct TabuResult {
  Assignment assignment;
  std::size_t clashes = 0;
};

/// Number of edges whose endpoints share a label.
std::size_t count_clashes(const Graph& g, std::span<const Label> assignment);

/// TabuCol local search for a fixed number of colours k.
///
/// A move recolours a clashing node. The best non-tabu move is taken each
/// iteration (random tie-break); a tabu move is allowed when it beats the
/// best clash count seen so far. After moving v away from colour c, the
/// pair (v, c) stays tabu for floor(tenure_scale * clashes) +
/// uniform{0..tenure_jitter} iterations. Returns the best assignment
/// visited, stopping early at zero clashes.
TabuResult tabu_search(const Graph& g, std::size_t k, Assignment start, std::uint64_t iterations, Seed seed,
                       const TabuParams& params = {});

/// Greedy partition crossover. Step i copies the largest colour class still
/// remaining in the current parent to offspring label i and deletes its
/// nodes from both parents. The first step draws from whichever parent
/// holds the largest class (parent A on ties) and steps then alternate.
/// Class ties go to the lower label. Nodes left after k steps get uniform
/// random labels.
Assignment gpx_crossover(std::span<const Label> parent_a, std::span<const Label> parent_b, std::size_t k,
                         Seed seed);

struct HeaParams {
  std::size_t population_size = 10;
  std::uint64_t tabu_iterations_per_offspring = 4000;
  double tabu_tenure_scale = 0.6;
  int tabu_tenure_jitter = 9;
  /// Wall-clock limit in seconds; 0 disables it (fully reproducible runs).
  double time_limit = 0.0;
  /// Hard cap on offspring produced over the whole run.
  std::uint64_t max_cycles = 100000;
  /// Offspring without improving the best clash count at the current k
  /// before the run gives up on that k.
  std::uint64_t stall_cycles = 20;
  Seed seed{};
};

void validate(const HeaParams& params);

/// Hybrid evolutionary algorithm (GPX recombination plus TabuCol).
///
/// Starts from DSatur with k one below its colour count and decrements k
/// after every clash-free k-colouring. Never returns more colours than
/// DSatur.
ColourResult hea_colour(const Graph& g, const HeaParams& params = {});

enum class Algorithm { Greedy, DSatur, Backtracking, Hea };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct ColourOptions {
  std::optional<std::uint64_t> node_limit;
  HeaParams hea;
};

/// Runs one algorithm on g's nodes. Greedy uses the natural node order.
/// For the heuristics the certificate's lower bound is the greedy clique.
ColourResult colour_nodes(const Graph& g, Algorithm algorithm, const ColourOptions& options = {});

/// Edge colouring through L(g); labels are indexed like g.edges(). The
/// certificate's lower bound is at least max_degree(g).
ColourResult colour_edges(const Graph& g, Algorithm algorithm, const ColourOptions& options = {});

struct FaceColourResult {
  ColourResult result;
  DualGraphResult dual;
};

/// Face colouring through the dual; labels are indexed like dual.faces.
/// The unbounded face is coloured like any other.
FaceColourResult colour_faces(const Graph& g, const RotationSystem& rot, Algorithm algorithm,
                              const ColourOptions& options = {},
                              std::optional<std::span<const Point>> coordinates = std::nullopt);

FaceColourResult colour_faces(const EmbeddedGraph& eg, Algorithm algorithm, const ColourOptions& options = {});

}  // namespace chromatica
