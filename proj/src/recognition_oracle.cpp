#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "medianvote/intermediate.hpp"

namespace medianvote {

namespace {

constexpr int kMaxOracleOrder = 7;

using SmallMask = std::uint32_t;

// Convexity of every vertex subset of a graph with at most 7 vertices.
std::vector<char> convex_subsets(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix dm = all_pairs_distances(g);
  std::vector<SmallMask> interval(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) {
        if (dm(u, v) == dm(u, w) + dm(w, v)) interval[u * n + v] |= SmallMask{1} << w;
      }
    }
  }
  std::vector<char> convex(std::size_t{1} << n, 1);
  for (SmallMask s = 0; s < convex.size(); ++s) {
    for (Vertex u = 0; u < n && convex[s]; ++u) {
      if (!(s >> u & 1)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if ((s >> v & 1) && (interval[u * n + v] & ~s)) {
          convex[s] = 0;
          break;
        }
      }
    }
  }
  return convex;
}

std::vector<std::vector<Graph>> enumerate_median_graphs() {
  std::vector<std::map<std::vector<std::uint8_t>, Graph>> by_order(kMaxOracleOrder + 1);
  by_order[1].emplace(canonical_code(Graph()), Graph());
  for (int s = 1; s < kMaxOracleOrder; ++s) {
    for (const auto& [code, g] : by_order[s]) {
      const std::vector<char> convex = convex_subsets(g);
      const SmallMask full = (SmallMask{1} << s) - 1;
      for (SmallMask w1 = 1; w1 <= full; ++w1) {
        if (!convex[w1]) continue;
        for (SmallMask w2 = 1; w2 <= full; ++w2) {
          const SmallMask shared = w1 & w2;
          if (!convex[w2] || (w1 | w2) != full || shared == 0) continue;
          if (s + std::popcount(shared) > kMaxOracleOrder) continue;
          const SmallMask only1 = w1 & ~w2;
          const SmallMask only2 = w2 & ~w1;
          bool crossing = false;
          for (const Edge& e : g.edges()) {
            const SmallMask bu = SmallMask{1} << e.u;
            const SmallMask bv = SmallMask{1} << e.v;
            if (((only1 & bu) && (only2 & bv)) || ((only2 & bu) && (only1 & bv))) crossing = true;
          }
          if (crossing) continue;
          Halfspaces h;
          for (Vertex v = 0; v < s; ++v) {
            if (w1 >> v & 1) h.w1.push_back(v);
            if (w2 >> v & 1) h.w2.push_back(v);
          }
          Graph expanded = convex_expansion(g, h).graph;
          auto key = canonical_code(expanded);
          by_order[expanded.order()].try_emplace(std::move(key), std::move(expanded));
        }
      }
    }
  }
  std::vector<std::vector<Graph>> out(kMaxOracleOrder + 1);
  for (int s = 1; s <= kMaxOracleOrder; ++s) {
    for (auto& [code, g] : by_order[s]) out[s].push_back(g);
  }
  return out;
}

}  // namespace

const std::vector<Graph>& median_graphs_of_order(int n) {
  static const std::vector<std::vector<Graph>> all = enumerate_median_graphs();
  if (n < 1 || n > kMaxOracleOrder) throw GraphError("median graph enumeration supports 1..7 vertices");
  return all[n];
}

bool recognition_oracle(const Profile& p, int max_n) {
  if (max_n > kMaxOracleOrder) throw ProfileError("recognition_oracle supports at most 7 orders");
  const Profile reduced = reduce(p).profile;
  const int k = reduced.voters();
  if (k > max_n) throw ProfileError("reduced profile has " + std::to_string(k) + " orders, above the oracle limit");
  const int m = reduced.alternatives();

  // For each pair a < b, the domain indices preferring a to b.
  std::vector<SmallMask> prefers;
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) {
      SmallMask bits = 0;
      for (int i = 0; i < k; ++i) {
        if (reduced.order(i).prefers(a, b)) bits |= SmallMask{1} << i;
      }
      prefers.push_back(bits);
    }
  }
  const SmallMask full = (SmallMask{1} << k) - 1;
  for (const Graph& g : median_graphs_of_order(k)) {
    const std::vector<char> convex = convex_subsets(g);
    std::vector<int> placed(k);  // vertex -> domain index
    std::iota(placed.begin(), placed.end(), 0);
    do {
      bool ok = true;
      for (SmallMask bits : prefers) {
        SmallMask vertices = 0;
        for (Vertex v = 0; v < k; ++v) {
          if (bits >> placed[v] & 1) vertices |= SmallMask{1} << v;
        }
        if (!convex[vertices] || !convex[full & ~vertices]) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(placed.begin(), placed.end()));
  }
  return false;
}

}  // namespace medianvote
