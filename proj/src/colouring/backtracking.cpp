#include <algorithm>
#include <string>

#include "chromatica/colouring.hpp"

namespace chromatica {
namespace {

/// Search state for the exact solver. Colours never exceed max_degree + 1:
/// the first descent is a greedy pass and the budget only shrinks after it.
class Backtracker {
 public:
  Backtracker(const Graph& g, std::optional<std::uint64_t> node_limit)
      : g_(g),
        n_(g.node_count()),
        width_(max_degree(g) + 1),
        node_limit_(node_limit),
        colour_(n_, -1),
        neighbour_count_(n_ * width_, 0),
        saturation_(n_, 0),
        uncoloured_degree_(n_, 0),
        class_size_(width_, 0),
        k_(n_) {
    for (std::size_t v = 0; v < n_; ++v) uncoloured_degree_[v] = g.degree(static_cast<Node>(v));
  }

  ColourResult run() {
    const CliqueResult clique = greedy_clique(g_);
    clique_size_ = clique.size();
    for (std::size_t i = 0; i < clique.members.size(); ++i) assign(clique.members[i], static_cast<Label>(i));

    bool bound_met = false;
    if (uncoloured_ == 0) {
      best_ = colour_;
      bound_met = true;
    } else {
      bound_met = search(select());
    }

    ColourResult result;
    result.colouring = make_colouring(best_, ElementKind::Node,
                                      {"backtracking", 0,
                                       node_limit_ ? "node_limit=" + std::to_string(*node_limit_) : std::string{}});
    auto& cert = result.certificate;
    cert.lower_bound = clique_size_;
    cert.upper_bound = result.colouring.k;
    cert.search_exhausted = !aborted_ && !bound_met;
    cert.optimal = cert.search_exhausted || cert.upper_bound == cert.lower_bound;
    return result;
  }

 private:
  std::size_t colours_in_use() const { return in_use_; }

  bool feasible(Node u, Label c) const {
    return neighbour_count_[static_cast<std::size_t>(u) * width_ + static_cast<std::size_t>(c)] == 0;
  }

  void assign(Node u, Label c) {
    const auto ui = static_cast<std::size_t>(u);
    const auto ci = static_cast<std::size_t>(c);
    colour_[ui] = c;
    --uncoloured_;
    if (class_size_[ci]++ == 0) ++in_use_;
    for (Node w : g_.neighbours(u)) {
      const auto wi = static_cast<std::size_t>(w);
      --uncoloured_degree_[wi];
      if (neighbour_count_[wi * width_ + ci]++ == 0) ++saturation_[wi];
    }
  }

  void unassign(Node u) {
    const auto ui = static_cast<std::size_t>(u);
    const auto ci = static_cast<std::size_t>(colour_[ui]);
    colour_[ui] = -1;
    ++uncoloured_;
    if (--class_size_[ci] == 0) --in_use_;
    for (Node w : g_.neighbours(u)) {
      const auto wi = static_cast<std::size_t>(w);
      ++uncoloured_degree_[wi];
      if (--neighbour_count_[wi * width_ + ci] == 0) --saturation_[wi];
    }
  }

  // DSatur rule with lowest-index tie-break.
  Node select() const {
    Node chosen = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (chosen < 0) {
        chosen = static_cast<Node>(v);
        continue;
      }
      const auto c = static_cast<std::size_t>(chosen);
      if (saturation_[v] > saturation_[c] ||
          (saturation_[v] == saturation_[c] && uncoloured_degree_[v] > uncoloured_degree_[c])) {
        chosen = static_cast<Node>(v);
      }
    }
    return chosen;
  }

  // Called once every node has a colour. True means the clique bound is met.
  bool complete() {
    const std::size_t used = colours_in_use();
    best_ = colour_;
    if (used == clique_size_) return true;
    k_ = used - 1;
    return false;
  }

  bool search(Node u) {
    ++expanded_;
    const std::size_t in_use = colours_in_use();
    for (std::size_t i = 0;; ++i) {
      if (i >= k_ || in_use > k_) break;
      // Unused colours are interchangeable, so only the first one is tried.
      if (i > in_use) break;
      if (!feasible(u, static_cast<Label>(i))) continue;
      assign(u, static_cast<Label>(i));
      bool done = false;
      if (uncoloured_ == 0) {
        done = complete();
      } else if (node_limit_ && expanded_ >= *node_limit_ && !best_.empty()) {
        aborted_ = true;
      } else {
        done = search(select());
      }
      unassign(u);
      if (done) return true;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t width_;
  std::optional<std::uint64_t> node_limit_;

  Assignment colour_;
  std::vector<std::uint32_t> neighbour_count_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> uncoloured_degree_;
  std::vector<std::size_t> class_size_;
  std::size_t in_use_ = 0;
  std::size_t uncoloured_ = n_;

  std::size_t k_;
  std::size_t clique_size_ = 0;
  Assignment best_;
  std::uint64_t expanded_ = 0;
  bool aborted_ = false;
};

}  // namespace

ColourResult backtracking_colour(const Graph& g, std::optional<std::uint64_t> node_limit) {
  return Backtracker(g, node_limit).run();
}

}  // namespace chromatica
