#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "chromatica/error.hpp"
#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/random.hpp"
#include "oracles.hpp"

using namespace chromatica;

TEST_CASE("build_graph normalises and deduplicates edges") {
  const Graph g = build_graph(4, {{2, 1}, {1, 2}, {0, 3}, {3, 0}, {1, 0}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  const std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}};
  CHECK(std::equal(g.edges().begin(), g.edges().end(), expected.begin(), expected.end()));
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.edge_index(3, 0) == std::optional<std::size_t>(1));
  CHECK_FALSE(g.edge_index(2, 3).has_value());
  CHECK(g.degree(0) == 2);
  CHECK(std::is_sorted(g.neighbours(0).begin(), g.neighbours(0).end()));
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(0, {}), InvalidArgument);
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), InvalidArgument);
}

TEST_CASE("adjacency agrees with the edge list") {
  Rng rng(Seed{11});
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 1 + rng.below(15);
    const Graph g = oracle::random_connected(n, 0.3, rng);
    std::set<std::pair<Node, Node>> edges;
    for (const Edge& e : g.edges()) {
      CHECK(e.u < e.v);
      edges.insert({e.u, e.v});
    }
    CHECK(edges.size() == g.edge_count());
    std::size_t degree_sum = 0;
    for (Node u = 0; u < static_cast<Node>(n); ++u) {
      degree_sum += g.degree(u);
      for (Node v = 0; v < static_cast<Node>(n); ++v) {
        CHECK(g.adjacent(u, v) == (edges.count({std::min(u, v), std::max(u, v)}) == 1));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("bipartite check matches exhaustive 2-colouring") {
  Rng rng(Seed{5});
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng.below(10);
    const Graph g = trial % 2 == 0 ? oracle::random_bipartite(n, 0.5, rng) : oracle::random_connected(n, 0.2, rng);
    const auto part = is_bipartite(g);
    CHECK(part.has_value() == oracle::brute_bipartite(g));
    if (part) {
      for (const Edge& e : g.edges()) {
        CHECK(part->side[static_cast<std::size_t>(e.u)] != part->side[static_cast<std::size_t>(e.v)]);
      }
    }
  }
}

TEST_CASE("connectivity and Eulerian checks") {
  CHECK(is_connected(oracle::cycle(5)));
  CHECK(is_eulerian(oracle::cycle(5)));
  CHECK_FALSE(is_eulerian(oracle::wheel(5)));
  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK_FALSE(is_eulerian(two));
  CHECK(is_connected(build_graph(1, {})));
  CHECK(max_degree(oracle::wheel(7)) == 6);
}

TEST_CASE("greedy clique is a maximal clique") {
  Rng rng(Seed{9});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + rng.below(20);
    const Graph g = oracle::random_connected(n, 0.5, rng);
    const auto clique = greedy_clique(g);
    REQUIRE(clique.size() >= 1);
    CHECK(std::is_sorted(clique.members.begin(), clique.members.end()));
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(g.adjacent(clique.members[i], clique.members[j]));
    }
    for (Node v = 0; v < static_cast<Node>(n); ++v) {
      if (std::find(clique.members.begin(), clique.members.end(), v) != clique.members.end()) continue;
      const bool extends = std::all_of(clique.members.begin(), clique.members.end(),
                                       [&](Node c) { return g.adjacent(v, c); });
      CHECK_FALSE(extends);
    }
  }
  const Graph k5 = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(greedy_clique(k5).size() == 5);
}

TEST_CASE("induced subgraph renumbers in the given order") {
  const Graph g = oracle::cycle(6);
  const std::vector<Node> pick{3, 2, 5};
  const Graph h = induced_subgraph(g, pick);
  CHECK(h.node_count() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.adjacent(0, 1));
}

TEST_CASE("Rng is reproducible and in range") {
  Rng a(Seed{42}), b(Seed{42}), c(Seed{43});
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs |= x != c();
  }
  CHECK(differs);
  Rng r(Seed{1});
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    ++counts[r.below(7)];
  }
  for (int k : counts) CHECK(std::abs(k - 10000) < 600);
  for (int i = 0; i < 1000; ++i) {
    const int v = r.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("shuffle yields a permutation") {
  Rng rng(Seed{3});
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  shuffle(w, rng);
  CHECK(w != v);
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("hash helpers") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_combine(1, 2) != hash_combine(2, 1));
  CHECK(hash_combine(0, 0) != 0);
  std::uint64_t s = 0;
  // reference SplitMix64 output for state 0
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("segment crossing predicate") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {1, 0}, {2, 1}));   // shared endpoint
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));   // parallel
  CHECK(segments_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}));         // collinear overlap
  CHECK(segments_cross({0, 0}, {2, 0}, {1, 0}, {1, 1}));         // T junction
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {2, 0}, {3, 0}));   // collinear, apart
}

TEST_CASE("signed area and coordinate validation") {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(signed_area2(square) == doctest::Approx(2.0));
  std::vector<Point> cw(square.rbegin(), square.rend());
  CHECK(signed_area2(cw) == doctest::Approx(-2.0));
  const Graph g = build_graph(2, {{0, 1}});
  const std::vector<Point> dup{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(validate_coordinates(g, dup), InvalidArgument);
  const std::vector<Point> nan{{0, 0}, {std::numeric_limits<double>::quiet_NaN(), 0}};
  CHECK_THROWS_AS(validate_coordinates(g, nan), InvalidArgument);
  const std::vector<Point> short_list{{0, 0}};
  CHECK_THROWS_AS(validate_coordinates(g, short_list), InvalidArgument);
  const std::vector<Point> ok{{0, 0}, {1, 0}};
  CHECK_NOTHROW(validate_coordinates(g, ok));
}
