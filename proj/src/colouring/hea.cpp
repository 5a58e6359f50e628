#include <algorithm>
#include <chrono>
#include <string>

#include "chromatica/colouring.hpp"
#include "chromatica/error.hpp"

namespace chromatica {
namespace {

/// DSatur-ordered construction under a fixed budget of k colours with
/// random tie-breaking; a node with no free colour takes a random one.
Assignment randomised_dsatur(const Graph& g, std::size_t k, Rng& rng) {
  const auto n = g.node_count();
  std::vector<std::uint64_t> priority(n);
  for (auto& p : priority) p = rng();
  Assignment colour(n, -1);
  std::vector<std::uint32_t> neighbour_count(n * k, 0);
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> uncoloured_degree(n);
  for (std::size_t v = 0; v < n; ++v) uncoloured_degree[v] = g.degree(static_cast<Node>(v));

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t chosen = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (chosen == n || saturation[v] > saturation[chosen] ||
          (saturation[v] == saturation[chosen] &&
           (uncoloured_degree[v] > uncoloured_degree[chosen] ||
            (uncoloured_degree[v] == uncoloured_degree[chosen] && priority[v] < priority[chosen])))) {
        chosen = v;
      }
    }
    std::size_t c = 0;
    while (c < k && neighbour_count[chosen * k + c] > 0) ++c;
    if (c == k) c = rng.below(k);
    colour[chosen] = static_cast<Label>(c);
    for (Node w : g.neighbours(static_cast<Node>(chosen))) {
      const auto wi = static_cast<std::size_t>(w);
      --uncoloured_degree[wi];
      if (neighbour_count[wi * k + c]++ == 0) ++saturation[wi];
    }
  }
  return colour;
}

class HeaRun {
 public:
  HeaRun(const Graph& g, const HeaParams& params)
      : g_(g), params_(params), rng_(params.seed), start_(std::chrono::steady_clock::now()) {}

  ColourResult run() {
    Colouring best = dsatur_colour(g_);
    const std::size_t lower = greedy_clique(g_).size();

    std::size_t k = best.k;
    while (k > lower && k > 1 && !out_of_budget()) {
      auto found = solve(k - 1);
      if (!found) break;
      best = make_colouring(std::move(*found), ElementKind::Node, {});
      k = best.k;
    }

    best.provenance = {"hea", params_.seed.value,
                       "population=" + std::to_string(params_.population_size) +
                           ",tabu_iterations=" + std::to_string(params_.tabu_iterations_per_offspring) +
                           ",cycles=" + std::to_string(cycles_)};
    ColourResult result{std::move(best), {}};
    result.certificate.lower_bound = lower;
    result.certificate.upper_bound = result.colouring.k;
    result.certificate.optimal = result.certificate.upper_bound == lower;
    return result;
  }

 private:
  bool out_of_budget() const {
    if (cycles_ >= params_.max_cycles) return true;
    if (params_.time_limit > 0.0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= params_.time_limit) return true;
    }
    return false;
  }

  TabuResult improve(Assignment a, std::size_t k) {
    return tabu_search(g_, k, std::move(a), params_.tabu_iterations_per_offspring, Seed{rng_()},
                       {params_.tabu_tenure_scale, params_.tabu_tenure_jitter});
  }

  // Searches for a clash-free k-colouring; nullopt on budget or stall.
  std::optional<Assignment> solve(std::size_t k) {
    std::vector<TabuResult> population;
    population.reserve(params_.population_size);
    for (std::size_t i = 0; i < params_.population_size; ++i) {
      auto individual = improve(randomised_dsatur(g_, k, rng_), k);
      if (individual.clashes == 0) return std::move(individual.assignment);
      population.push_back(std::move(individual));
      if (out_of_budget()) return std::nullopt;
    }

    std::size_t best_clashes = std::min_element(population.begin(), population.end(), [](const auto& a, const auto& b) {
                                 return a.clashes < b.clashes;
                               })->clashes;
    std::uint64_t stall = 0;
    while (!out_of_budget()) {
      const auto pop = population.size();
      const auto a = static_cast<std::size_t>(rng_.below(pop));
      auto b = static_cast<std::size_t>(rng_.below(pop - 1));
      if (b >= a) ++b;
      auto offspring = improve(gpx_crossover(population[a].assignment, population[b].assignment, k, Seed{rng_()}), k);
      ++cycles_;
      if (offspring.clashes == 0) return std::move(offspring.assignment);

      const std::size_t weaker = population[a].clashes > population[b].clashes ? a : b;
      if (offspring.clashes < best_clashes) {
        best_clashes = offspring.clashes;
        stall = 0;
      } else if (++stall >= params_.stall_cycles) {
        population[weaker] = std::move(offspring);
        return std::nullopt;
      }
      population[weaker] = std::move(offspring);
    }
    return std::nullopt;
  }

  const Graph& g_;
  const HeaParams& params_;
  Rng rng_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t cycles_ = 0;
};

}  // namespace

void validate(const HeaParams& params) {
  if (params.population_size < 2) throw InvalidArgument("HEA population size must be at least 2");
  if (params.tabu_iterations_per_offspring == 0) throw InvalidArgument("HEA tabu iterations must be positive");
  if (params.stall_cycles == 0) throw InvalidArgument("HEA stall budget must be positive");
  if (params.max_cycles == 0) throw InvalidArgument("HEA cycle budget must be positive");
  if (params.tabu_tenure_scale < 0.0) throw InvalidArgument("tabu tenure scale must be non-negative");
  if (params.tabu_tenure_jitter < 0) throw InvalidArgument("tabu tenure jitter must be non-negative");
  if (params.time_limit < 0.0) throw InvalidArgument("time limit must be non-negative");
}

ColourResult hea_colour(const Graph& g, const HeaParams& params) {
  validate(params);
  return HeaRun(g, params).run();
}

}  // namespace chromatica
