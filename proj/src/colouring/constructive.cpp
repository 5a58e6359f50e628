#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "chromatica/colouring.hpp"
#include "chromatica/error.hpp"

namespace chromatica {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Node: return "node";
    case ElementKind::Edge: return "edge";
    case ElementKind::Face: return "face";
  }
  return "node";
}

std::optional<ElementKind> parse_element_kind(std::string_view text) {
  if (text == "node" || text == "nodes") return ElementKind::Node;
  if (text == "edge" || text == "edges") return ElementKind::Edge;
  if (text == "face" || text == "faces") return ElementKind::Face;
  return std::nullopt;
}

std::size_t normalise_labels(Assignment& labels) {
  std::map<Label, Label> relabel;
  for (Label& l : labels) {
    const auto [it, inserted] = relabel.try_emplace(l, static_cast<Label>(relabel.size()));
    l = it->second;
  }
  return relabel.size();
}

Colouring make_colouring(Assignment labels, ElementKind kind, Provenance provenance) {
  Colouring c;
  c.k = normalise_labels(labels);
  c.labels = std::move(labels);
  c.kind = kind;
  c.provenance = std::move(provenance);
  return c;
}

Colouring greedy_colour(const Graph& g, std::span<const Node> order) {
  const auto n = g.node_count();
  if (order.size() != n) {
    throw InvalidArgument("greedy order has " + std::to_string(order.size()) + " entries for " +
                          std::to_string(n) + " nodes");
  }
  std::vector<char> placed(n, 0);
  for (Node v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || placed[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("greedy order is not a permutation of the nodes (at node " + std::to_string(v) + ")");
    }
    placed[static_cast<std::size_t>(v)] = 1;
  }

  Assignment labels(n, -1);
  // stamp[c] == step marks colour c as taken by a neighbour of the current node
  std::vector<std::size_t> stamp(n + 1, n + 1);
  for (std::size_t step = 0; step < n; ++step) {
    const Node v = order[step];
    for (Node w : g.neighbours(v)) {
      const Label c = labels[static_cast<std::size_t>(w)];
      if (c >= 0) stamp[static_cast<std::size_t>(c)] = step;
    }
    Label c = 0;
    while (stamp[static_cast<std::size_t>(c)] == step) ++c;
    labels[static_cast<std::size_t>(v)] = c;
  }
  return make_colouring(std::move(labels), ElementKind::Node, {"greedy", 0, ""});
}

namespace {

struct DsaturRun {
  std::vector<Node> order;
  Assignment labels;
};

DsaturRun run_dsatur(const Graph& g) {
  const auto n = g.node_count();
  struct Key {
    std::size_t saturation;
    std::size_t uncoloured_degree;
    Node node;
  };
  const auto before = [](const Key& a, const Key& b) {
    if (a.saturation != b.saturation) return a.saturation > b.saturation;
    if (a.uncoloured_degree != b.uncoloured_degree) return a.uncoloured_degree > b.uncoloured_degree;
    return a.node < b.node;
  };
  std::set<Key, decltype(before)> queue(before);
  std::vector<std::size_t> uncoloured_degree(n);
  std::vector<std::vector<Label>> neighbour_colours(n);  // sorted, distinct
  for (std::size_t v = 0; v < n; ++v) {
    uncoloured_degree[v] = g.degree(static_cast<Node>(v));
    queue.insert({0, uncoloured_degree[v], static_cast<Node>(v)});
  }

  DsaturRun run;
  run.labels.assign(n, -1);
  run.order.reserve(n);
  while (!queue.empty()) {
    const Node v = queue.begin()->node;
    queue.erase(queue.begin());
    const auto vi = static_cast<std::size_t>(v);
    Label c = 0;
    for (Label used : neighbour_colours[vi]) {
      if (used != c) break;
      ++c;
    }
    run.labels[vi] = c;
    run.order.push_back(v);
    for (Node w : g.neighbours(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (run.labels[wi] >= 0) continue;
      auto& colours = neighbour_colours[wi];
      queue.erase({colours.size(), uncoloured_degree[wi], w});
      --uncoloured_degree[wi];
      const auto pos = std::lower_bound(colours.begin(), colours.end(), c);
      if (pos == colours.end() || *pos != c) colours.insert(pos, c);
      queue.insert({colours.size(), uncoloured_degree[wi], w});
    }
  }
  return run;
}

}  // namespace

std::vector<Node> dsatur_order(const Graph& g) { return run_dsatur(g).order; }

Colouring dsatur_colour(const Graph& g) {
  auto run = run_dsatur(g);
  return make_colouring(std::move(run.labels), ElementKind::Node, {"dsatur", 0, ""});
}

}  // namespace chromatica
