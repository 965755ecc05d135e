#include "medianvote/serial.hpp"

#include <deque>

namespace medianvote::serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    dm.at(s, s) = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (dm(s, y) < 0) {
          dm.at(s, y) = dm(s, x) + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dm;
}

bool is_median_graph(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix dm = serial::all_pairs_distances(g);
  auto between = [&](Vertex u, Vertex w, Vertex v) { return dm(u, v) == dm(u, w) + dm(w, v); };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        int medians = 0;
        for (Vertex x = 0; x < n && medians < 2; ++x) {
          if (between(a, x, b) && between(b, x, c) && between(a, x, c)) ++medians;
        }
        if (medians != 1) return false;
      }
    }
  }
  return true;
}

bool is_intermediate(const Profile& p, const Graph& g) {
  if (p.voters() != g.order()) throw ProfileError("voter count differs from graph order");
  const DistanceMatrix dm = serial::all_pairs_distances(g);
  const int n = g.order();
  const int m = p.alternatives();
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (a == b) continue;
      // Any vertex between two members of V_ab must be in V_ab.
      for (Vertex u = 0; u < n; ++u) {
        if (!p.order(u).prefers(a, b)) continue;
        for (Vertex v = u + 1; v < n; ++v) {
          if (!p.order(v).prefers(a, b)) continue;
          for (Vertex w = 0; w < n; ++w) {
            if (dm(u, v) == dm(u, w) + dm(w, v) && !p.order(w).prefers(a, b)) return false;
          }
        }
      }
    }
  }
  return true;
}

NeighborGraph build_neighbor_graph(std::span<const LinearOrder> domain) {
  const int n = static_cast<int>(domain.size());
  if (n == 0) throw ProfileError("empty domain");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (domain[i] == domain[j]) throw ProfileError("domain has repeated orders");
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool blocked = false;
      for (int k = 0; k < n && !blocked; ++k) {
        blocked = k != i && k != j && is_order_between(domain[i], domain[k], domain[j]);
      }
      if (!blocked) edges.push_back({i, j});
    }
  }
  std::vector<Vertex> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  return {Graph(n, std::move(edges)), std::move(identity)};
}

}  // namespace medianvote::serial
