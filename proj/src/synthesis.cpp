#include "medianvote/synthesis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "medianvote/intermediate.hpp"

namespace medianvote {

namespace {

// expansion vertex -> vertex of the graph that was split, matching on
// (contracted vertex, side of the split).
std::vector<Vertex> match_expansion(const Expansion& expansion, const Contraction& contraction,
                                    const Halfspaces& split, int fine_order) {
  std::map<std::pair<Vertex, Side>, Vertex> by_origin;
  for (Vertex y = 0; y < expansion.graph.order(); ++y) {
    by_origin[{expansion.origin[y].origin, expansion.origin[y].side}] = y;
  }
  std::vector<char> in_first(fine_order, 0);
  for (Vertex v : split.w1) in_first[v] = 1;
  std::vector<Vertex> to_target(expansion.graph.order(), -1);
  for (Vertex x = 0; x < fine_order; ++x) {
    const auto it = by_origin.find({contraction.vertex_map[x], in_first[x] ? Side::first : Side::second});
    if (it == by_origin.end() || to_target[it->second] >= 0) {
      throw std::logic_error("split does not invert a convex expansion");
    }
    to_target[it->second] = x;
  }
  return to_target;
}

Graph relabel(const Graph& g, std::span<const Vertex> to) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(to[e.u], to[e.v]));
  return Graph(g.order(), std::move(edges));
}

std::vector<LinearOrder> all_orders(int m) {
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::vector<LinearOrder> out;
  do {
    out.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

}  // namespace

ExpansionHistory mulder_decompose(const Graph& g) {
  if (!is_median_graph(g)) throw GraphError("graph is not a median graph");
  std::vector<ExpansionStep> steps;
  Graph current = g;
  while (current.order() > 1) {
    const DistanceMatrix dm = all_pairs_distances(current);
    const Halfspaces split = edge_split(current, dm, current.edges().front());
    Contraction contraction = contract_split(current, split);
    Expansion expansion = convex_expansion(contraction.graph, contraction.image);
    std::vector<Vertex> to_target = match_expansion(expansion, contraction, split, current.order());
    current = contraction.graph;
    steps.push_back({std::move(contraction.graph), std::move(contraction.image), std::move(expansion),
                     std::move(to_target)});
  }
  std::reverse(steps.begin(), steps.end());
  return {std::move(steps)};
}

Graph replay(const ExpansionHistory& history) {
  Graph current;
  for (const ExpansionStep& step : history.steps) {
    if (!(step.base == current)) throw std::logic_error("expansion history is not a chain");
    current = relabel(convex_expansion(current, step.halves).graph, step.to_target);
  }
  return current;
}

LinearOrder clone_alternative(const LinearOrder& r, Alternative x, Side side) {
  const Alternative clone = r.size();
  std::vector<Alternative> ranking;
  ranking.reserve(r.size() + 1);
  for (Alternative a : r.ranking()) {
    if (a == x && side == Side::second) ranking.push_back(clone);
    ranking.push_back(a);
    if (a == x && side == Side::first) ranking.push_back(clone);
  }
  return LinearOrder(std::move(ranking));
}

Profile synthesize_profile(const Graph& g) {
  const ExpansionHistory history = mulder_decompose(g);
  std::vector<LinearOrder> orders{LinearOrder::identity(1)};
  Alternative latest = 0;
  for (std::size_t i = 0; i < history.steps.size(); ++i) {
    const ExpansionStep& step = history.steps[i];
    const Expansion& expansion = step.expanded;
    std::vector<LinearOrder> next(expansion.graph.order(), LinearOrder::identity(1));
    for (Vertex y = 0; y < expansion.graph.order(); ++y) {
      const VertexOrigin& from = expansion.origin[y];
      next[step.to_target[y]] = clone_alternative(orders[from.origin], latest, from.side);
    }
    orders = std::move(next);
    latest = orders.front().size() - 1;
    const Graph& finer = i + 1 < history.steps.size() ? history.steps[i + 1].base : g;
    if (!is_intermediate(Profile(latest + 1, orders), finer)) {
      throw std::logic_error("clone construction lost intermediateness at step " + std::to_string(i));
    }
  }
  return Profile(latest + 1, std::move(orders));
}

Graph random_median_graph(int n, std::uint64_t seed) {
  if (n < 1) throw GraphError("random_median_graph needs n >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Graph g;
  while (g.order() < n) {
    const int size = g.order();
    const int room = n - size;
    const IntervalIndex intervals(all_pairs_distances(g));

    // Random convex core, grown from one vertex while it fits in `room`.
    VertexMask core(size);
    core.set(uniform(0, size - 1));
    for (int grow = uniform(0, 3); grow > 0; --grow) {
      std::vector<Vertex> frontier;
      for (Vertex v : from_mask(core)) {
        for (Vertex w : g.neighbors(v)) {
          if (!core[w]) frontier.push_back(w);
        }
      }
      if (frontier.empty()) break;
      VertexMask bigger = core;
      bigger.set(frontier[uniform(0, static_cast<int>(frontier.size()) - 1)]);
      bigger = intervals.hull(std::move(bigger));
      if (static_cast<int>(bigger.count()) > room) break;
      core = std::move(bigger);
    }

    VertexMask all(size);
    all.set();
    VertexMask w1 = all;
    VertexMask w2 = core;
    if (uniform(0, 1) == 1 && core != all) {
      // Hand each component of G - core to one side, then close both sides.
      VertexMask side1 = core;
      VertexMask side2 = core;
      VertexMask seen = core;
      for (Vertex s = 0; s < size; ++s) {
        if (seen[s]) continue;
        VertexMask& side = uniform(0, 1) ? side1 : side2;
        std::vector<Vertex> stack{s};
        seen.set(s);
        while (!stack.empty()) {
          const Vertex x = stack.back();
          stack.pop_back();
          side.set(x);
          for (Vertex y : g.neighbors(x)) {
            if (!seen[y]) {
              seen.set(y);
              stack.push_back(y);
            }
          }
        }
      }
      side1 = intervals.hull(std::move(side1));
      side2 = intervals.hull(std::move(side2));
      const VertexMask only1 = side1 - side2;
      const VertexMask only2 = side2 - side1;
      bool crossing = false;
      for (const Edge& e : g.edges()) {
        if ((only1[e.u] && only2[e.v]) || (only2[e.u] && only1[e.v])) crossing = true;
      }
      if ((side1 | side2) == all && !crossing && static_cast<int>((side1 & side2).count()) <= room) {
        w1 = std::move(side1);
        w2 = std::move(side2);
      }
    }
    g = convex_expansion(g, {from_mask(w1), from_mask(w2)}).graph;
  }
  return g;
}

std::optional<Profile> find_reduced_intermediate_profile(const Graph& g, int m) {
  const int n = g.order();
  const std::vector<LinearOrder> orders = all_orders(m);
  if (static_cast<int>(orders.size()) < n) return std::nullopt;
  const DistanceMatrix dm = all_pairs_distances(g);

  std::vector<Vertex> visit;  // BFS order so each new vertex touches placed ones
  {
    std::vector<char> seen(n, 0);
    visit.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < visit.size(); ++i) {
      for (Vertex y : g.neighbors(visit[i])) {
        if (!seen[y]) {
          seen[y] = 1;
          visit.push_back(y);
        }
      }
    }
  }
  std::vector<int> chosen(n, -1);
  std::vector<char> used(orders.size(), 0);

  // Vertices between two placed vertices must carry an order between theirs.
  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i <= depth; ++i) {
      for (std::size_t j = i + 1; j <= depth; ++j) {
        for (std::size_t k = 0; k <= depth; ++k) {
          const Vertex u = visit[i], v = visit[j], w = visit[k];
          if (k == i || k == j || dm(u, v) != dm(u, w) + dm(w, v)) continue;
          if (k != depth && i != depth && j != depth) continue;
          if (!is_order_between(orders[chosen[u]], orders[chosen[w]], orders[chosen[v]])) return false;
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == visit.size()) return true;
    const Vertex x = visit[depth];
    for (std::size_t o = 0; o < orders.size(); ++o) {
      if (used[o]) continue;
      chosen[x] = static_cast<int>(o);
      used[o] = 1;
      if (consistent(depth) && self(self, depth + 1)) return true;
      used[o] = 0;
      chosen[x] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<LinearOrder> placed;
  for (Vertex v = 0; v < n; ++v) placed.push_back(orders[chosen[v]]);
  Profile found(m, std::move(placed));
  if (!is_intermediate(found, g)) throw std::logic_error("betweenness search produced a non-intermediate profile");
  return found;
}

}  // namespace medianvote
