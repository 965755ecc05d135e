#include <algorithm>
#include <numeric>

#include "medianvote/graph.hpp"

namespace medianvote {

namespace {

// Vertex invariant: degree plus sorted multiset of distance counts.
std::vector<std::vector<int>> signatures(const Graph& g, const DistanceMatrix& dm) {
  std::vector<std::vector<int>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> hist(g.order(), 0);
    for (Vertex w = 0; w < g.order(); ++w) ++hist[dm(v, w)];
    sig[v] = std::move(hist);
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), dg_(all_pairs_distances(g)), dh_(all_pairs_distances(h)),
        sg_(signatures(g, dg_)), sh_(signatures(h, dh_)), map_(g.order(), -1),
        used_(h.order(), 0) {
    // Visit g's vertices in BFS order so every step after the first is
    // constrained by an already-mapped neighbour.
    std::vector<char> seen(g.order(), 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex y : g.neighbors(order_[i])) {
        if (!seen[y]) {
          seen[y] = 1;
          order_.push_back(y);
        }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < h_.order(); ++y) {
      if (used_[y] || sg_[x] != sh_[y]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex px = order_[i];
        consistent = dg_(x, px) == dh_(y, map_[px]);
      }
      if (!consistent) continue;
      map_[x] = y;
      used_[y] = 1;
      if (run(depth + 1)) return true;
      used_[y] = 0;
      map_[x] = -1;
    }
    return false;
  }

  std::vector<Vertex> mapping() const { return map_; }

 private:
  const Graph& g_;
  const Graph& h_;
  DistanceMatrix dg_, dh_;
  std::vector<std::vector<int>> sg_, sh_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  Matcher matcher(g, h);
  if (!matcher.run()) return std::nullopt;
  // Distance preservation on connected graphs implies adjacency preservation.
  return matcher.mapping();
}

std::vector<std::uint8_t> canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw GraphError("canonical_code supports at most 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n) * (n - 1) / 2);
  do {
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        code[k++] = g.adjacent(perm[i], perm[j]) ? 1 : 0;
      }
    }
    if (best.empty() || code > best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), static_cast<std::uint8_t>(n));
  return best;
}

}  // namespace medianvote
