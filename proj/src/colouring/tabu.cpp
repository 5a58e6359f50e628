#include <algorithm>
#include <cmath>
#include <string>

#include "chromatica/colouring.hpp"
#include "chromatica/error.hpp"

namespace chromatica {
namespace {

void check_assignment(std::span<const Label> assignment, std::size_t n, std::size_t k, const char* what) {
  if (assignment.size() != n) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(assignment.size()) + " labels for " +
                          std::to_string(n) + " nodes");
  }
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] < 0 || static_cast<std::size_t>(assignment[v]) >= k) {
      throw InvalidArgument(std::string(what) + ": node " + std::to_string(v) + " has label " +
                            std::to_string(assignment[v]) + " outside 0.." + std::to_string(k - 1));
    }
  }
}

}  // namespace

std::size_t count_clashes(const Graph& g, std::span<const Label> assignment) {
  std::size_t clashes = 0;
  for (const Edge& e : g.edges()) {
    if (assignment[static_cast<std::size_t>(e.u)] == assignment[static_cast<std::size_t>(e.v)]) ++clashes;
  }
  return clashes;
}

TabuResult tabu_search(const Graph& g, std::size_t k, Assignment start, std::uint64_t iterations, Seed seed,
                       const TabuParams& params) {
  if (k < 1) throw InvalidArgument("tabu search needs k >= 1");
  const auto n = g.node_count();
  check_assignment(start, n, k, "tabu start");

  // gamma[v*k + c]: neighbours of v currently holding colour c
  std::vector<int> gamma(n * k, 0);
  for (const Edge& e : g.edges()) {
    ++gamma[static_cast<std::size_t>(e.u) * k + static_cast<std::size_t>(start[static_cast<std::size_t>(e.v)])];
    ++gamma[static_cast<std::size_t>(e.v) * k + static_cast<std::size_t>(start[static_cast<std::size_t>(e.u)])];
  }
  Assignment colour = std::move(start);
  long clashes = static_cast<long>(count_clashes(g, colour));
  TabuResult best{colour, static_cast<std::size_t>(clashes)};
  if (clashes == 0 || k == 1) return best;

  Rng rng(seed);
  std::vector<std::uint64_t> tabu_until(n * k, 0);
  std::vector<Node> clashing;
  for (std::uint64_t it = 1; it <= iterations; ++it) {
    Node move_node = -1;
    Label move_colour = -1;
    int move_delta = 0;
    std::uint64_t ties = 0;
    clashing.clear();
    for (std::size_t v = 0; v < n; ++v) {
      const auto own = static_cast<std::size_t>(colour[v]);
      const int own_conflicts = gamma[v * k + own];
      if (own_conflicts == 0) continue;
      clashing.push_back(static_cast<Node>(v));
      for (std::size_t c = 0; c < k; ++c) {
        if (c == own) continue;
        const int delta = gamma[v * k + c] - own_conflicts;
        const bool tabu = tabu_until[v * k + c] >= it;
        const bool aspiration = clashes + delta < static_cast<long>(best.clashes);
        if (tabu && !aspiration) continue;
        if (move_node < 0 || delta < move_delta) {
          move_node = static_cast<Node>(v);
          move_colour = static_cast<Label>(c);
          move_delta = delta;
          ties = 1;
        } else if (delta == move_delta && rng.below(++ties) == 0) {
          move_node = static_cast<Node>(v);
          move_colour = static_cast<Label>(c);
        }
      }
    }
    if (move_node < 0) {
      // everything is tabu: random perturbation of a clashing node
      move_node = clashing[rng.below(clashing.size())];
      const auto own = static_cast<std::uint64_t>(colour[static_cast<std::size_t>(move_node)]);
      auto c = rng.below(k - 1);
      if (c >= own) ++c;
      move_colour = static_cast<Label>(c);
      const auto vi = static_cast<std::size_t>(move_node);
      move_delta = gamma[vi * k + c] - gamma[vi * k + own];
    }

    const auto vi = static_cast<std::size_t>(move_node);
    const auto old_colour = static_cast<std::size_t>(colour[vi]);
    const auto new_colour = static_cast<std::size_t>(move_colour);
    for (Node w : g.neighbours(move_node)) {
      const auto wi = static_cast<std::size_t>(w);
      --gamma[wi * k + old_colour];
      ++gamma[wi * k + new_colour];
    }
    colour[vi] = move_colour;
    clashes += move_delta;
    const auto tenure = static_cast<std::uint64_t>(std::floor(params.tenure_scale * static_cast<double>(clashes))) +
                        static_cast<std::uint64_t>(rng.between(0, params.tenure_jitter));
    tabu_until[vi * k + old_colour] = it + tenure;

    if (clashes < static_cast<long>(best.clashes)) {
      best.assignment = colour;
      best.clashes = static_cast<std::size_t>(clashes);
      if (clashes == 0) break;
    }
  }
  return best;
}

Assignment gpx_crossover(std::span<const Label> parent_a, std::span<const Label> parent_b, std::size_t k, Seed seed) {
  if (k < 1) throw InvalidArgument("crossover needs k >= 1");
  const auto n = parent_a.size();
  check_assignment(parent_a, n, k, "parent A");
  check_assignment(parent_b, n, k, "parent B");

  const std::span<const Label> parents[2] = {parent_a, parent_b};
  std::vector<std::vector<Node>> members[2];
  std::vector<std::size_t> remaining[2];
  for (int p = 0; p < 2; ++p) {
    members[p].resize(k);
    remaining[p].assign(k, 0);
    for (std::size_t v = 0; v < n; ++v) {
      members[p][static_cast<std::size_t>(parents[p][v])].push_back(static_cast<Node>(v));
      ++remaining[p][static_cast<std::size_t>(parents[p][v])];
    }
  }
  const auto largest = [&](int p) {
    return static_cast<std::size_t>(std::max_element(remaining[p].begin(), remaining[p].end()) - remaining[p].begin());
  };

  Assignment child(n, -1);
  int current = remaining[1][largest(1)] > remaining[0][largest(0)] ? 1 : 0;
  for (std::size_t step = 0; step < k; ++step, current ^= 1) {
    const std::size_t cls = largest(current);
    if (remaining[current][cls] == 0) break;
    for (Node v : members[current][cls]) {
      const auto vi = static_cast<std::size_t>(v);
      if (child[vi] >= 0) continue;
      child[vi] = static_cast<Label>(step);
      for (int p = 0; p < 2; ++p) --remaining[p][static_cast<std::size_t>(parents[p][vi])];
    }
  }
  Rng rng(seed);
  for (auto& label : child) {
    if (label < 0) label = static_cast<Label>(rng.below(k));
  }
  return child;
}

}  // namespace chromatica
