#include "medianvote/intermediate.hpp"

#include <algorithm>
#include <atomic>

namespace medianvote {

namespace {

void check_sizes(const Profile& p, const Graph& g) {
  if (p.voters() != g.order()) {
    throw ProfileError("profile has " + std::to_string(p.voters()) + " voters but graph has " +
                       std::to_string(g.order()) + " vertices");
  }
}

std::vector<PairMask> pair_masks(std::span<const LinearOrder> orders) {
  std::vector<PairMask> masks;
  masks.reserve(orders.size());
  for (const LinearOrder& r : orders) masks.push_back(r.pair_mask());
  return masks;
}

}  // namespace

bool is_intermediate(const Profile& p, const Graph& g) {
  check_sizes(p, g);
  const int n = g.order();
  const int m = p.alternatives();
  if (n == 1 || m == 1) return true;
  const IntervalIndex intervals(all_pairs_distances(g));
  const int pairs = m * (m - 1) / 2;
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < pairs; ++k) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    // Decode k back into (a, b), a < b.
    int a = 0;
    int rest = k;
    while (rest >= m - 1 - a) {
      rest -= m - 1 - a;
      ++a;
    }
    const int b = a + 1 + rest;
    VertexMask ab(n);
    for (int v = 0; v < n; ++v) {
      if (p.order(v).prefers(a, b)) ab.set(v);
    }
    if (!intervals.is_convex(ab) || !intervals.is_convex(~ab)) ok = false;
  }
  return ok;
}

bool check_condition_iii(const Profile& p, const Graph& g) {
  check_sizes(p, g);
  const int n = g.order();
  const DistanceMatrix dm = all_pairs_distances(g);
  const std::vector<PairMask> masks = pair_masks(p.orders());

  // Along a path from s, `flipped` holds the pairs on which the current order
  // differs from s. Single crossing means that set only ever grows.
  auto walk = [&](auto&& self, Vertex s, Vertex x, const PairMask& flipped) -> bool {
    for (Vertex y : g.neighbors(x)) {
      if (dm(s, y) != dm(s, x) + 1) continue;
      PairMask next = masks[y] ^ masks[s];
      if (!flipped.is_subset_of(next)) return false;
      if (!self(self, s, y, next)) return false;
    }
    return true;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (!walk(walk, s, s, PairMask(masks[s].size()))) return false;
  }
  return true;
}

std::vector<OrderedPair> separated_pairs(const LinearOrder& from, const LinearOrder& to) {
  std::vector<OrderedPair> out;
  for (Alternative c = 0; c < from.size(); ++c) {
    for (Alternative d = 0; d < from.size(); ++d) {
      if (c != d && from.prefers(c, d) && to.prefers(d, c)) out.emplace_back(c, d);
    }
  }
  return out;
}

std::vector<CutEdge> ab_cuts(const Profile& p, const Graph& g, Alternative a, Alternative b) {
  check_sizes(p, g);
  if (a == b || a < 0 || b < 0 || a >= p.alternatives() || b >= p.alternatives()) {
    throw ProfileError("ab_cuts needs two distinct valid alternatives");
  }
  std::vector<CutEdge> cuts;
  for (const Edge& e : g.edges()) {
    const bool u_ab = p.order(e.u).prefers(a, b);
    const bool v_ab = p.order(e.v).prefers(a, b);
    if (u_ab == v_ab) continue;
    const Vertex from = u_ab ? e.u : e.v;
    const Vertex to = u_ab ? e.v : e.u;
    cuts.push_back({from, to, separated_pairs(p.order(from), p.order(to))});
  }
  std::sort(cuts.begin(), cuts.end(), [](const CutEdge& x, const CutEdge& y) {
    return std::pair(x.from, x.to) < std::pair(y.from, y.to);
  });
  return cuts;
}

NeighborGraph build_neighbor_graph(std::span<const LinearOrder> domain) {
  const int n = static_cast<int>(domain.size());
  if (n == 0) throw ProfileError("empty domain");
  {
    std::vector<LinearOrder> sorted(domain.begin(), domain.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ProfileError("domain is not reduced; reduce the profile first");
    }
  }
  // Pair masks flattened to `words` blocks per order so the inner test allocates nothing.
  const std::vector<PairMask> masks = pair_masks(domain);
  const std::size_t words = masks.front().num_blocks();
  std::vector<PairMask::block_type> flat(words * n);
  for (int i = 0; i < n; ++i) boost::to_block_range(masks[i], flat.begin() + words * i);
  auto block = [&](int i, std::size_t w) { return flat[words * i + w]; };

  std::vector<std::vector<Edge>> found(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool neighbours = true;
      for (int k = 0; k < n && neighbours; ++k) {
        if (k == i || k == j) continue;
        // k lies between i and j iff it departs from i only where i and j disagree.
        bool between = true;
        for (std::size_t w = 0; w < words && between; ++w) {
          between = ((block(i, w) ^ block(k, w)) & ~(block(i, w) ^ block(j, w))) == 0;
        }
        neighbours = !between;
      }
      if (neighbours) found[i].push_back({i, j});
    }
  }
  std::vector<Edge> edges;
  for (auto& part : found) edges.insert(edges.end(), part.begin(), part.end());
  std::vector<Vertex> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  return {Graph(n, std::move(edges)), std::move(identity)};
}

}  // namespace medianvote
