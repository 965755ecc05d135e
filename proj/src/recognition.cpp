#include <algorithm>
#include <map>
#include <sstream>

#include "medianvote/intermediate.hpp"

namespace medianvote {

namespace {

std::string edge_text(Vertex from, Vertex to) { return std::to_string(from) + "-" + std::to_string(to); }

std::string set_text(std::span<const Vertex> vertices) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? "," : "") << vertices[i];
  out << '}';
  return out.str();
}

// Recursive structure check on blocks of the neighbour graph. Vertex ids in
// witnesses are neighbour-graph ids, i.e. indices into the reduced domain.
class Recognizer {
 public:
  Recognizer(std::span<const LinearOrder> domain, const Graph& graph, int m)
      : domain_(domain), graph_(graph), m_(m) {}

  std::optional<Rejection> check(const std::vector<Vertex>& block, int depth) {
    if (block.size() <= 1) return std::nullopt;
    const Graph local = induced_subgraph(graph_, block);
    const int n = local.order();

    // Pivot: lexicographically smallest pair splitting the block.
    Alternative a = -1;
    Alternative b = -1;
    std::vector<Vertex> side_ab;
    std::vector<Vertex> side_ba;
    for (Alternative x = 0; x < m_ && a < 0; ++x) {
      for (Alternative y = x + 1; y < m_ && a < 0; ++y) {
        side_ab.clear();
        side_ba.clear();
        for (Vertex v = 0; v < n; ++v) (domain_[block[v]].prefers(x, y) ? side_ab : side_ba).push_back(v);
        if (!side_ab.empty() && !side_ba.empty()) {
          a = x;
          b = y;
        }
      }
    }
    if (a < 0) throw std::logic_error("block of distinct orders without a splitting pair");

    std::vector<char> in_ab(n, 0);
    for (Vertex v : side_ab) in_ab[v] = 1;
    struct Cut {
      Vertex from, to;
      std::vector<OrderedPair> signature;
    };
    std::vector<Cut> cuts;
    for (const Edge& e : local.edges()) {
      if (in_ab[e.u] == in_ab[e.v]) continue;
      const Vertex from = in_ab[e.u] ? e.u : e.v;
      const Vertex to = in_ab[e.u] ? e.v : e.u;
      cuts.push_back({from, to, separated_pairs(domain_[block[from]], domain_[block[to]])});
    }
    trace_.push_back("depth " + std::to_string(depth) + ": pair (" + std::to_string(a) + "," + std::to_string(b) +
                     ") splits " + std::to_string(side_ab.size()) + "/" + std::to_string(side_ba.size()) + " with " +
                     std::to_string(cuts.size()) + " cut edge(s)");

    // (i) cut edges form a matching.
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = i + 1; j < cuts.size(); ++j) {
        if (cuts[i].from == cuts[j].from || cuts[i].to == cuts[j].to) {
          return Rejection{"i", edge_text(block[cuts[i].from], block[cuts[i].to]) + " " +
                                    edge_text(block[cuts[j].from], block[cuts[j].to])};
        }
      }
    }
    // (ii) one common signature.
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (cuts[i].signature != cuts[0].signature) {
        return Rejection{"ii", edge_text(block[cuts[0].from], block[cuts[0].to]) + " " +
                                   edge_text(block[cuts[i].from], block[cuts[i].to])};
      }
    }
    // (v) the block is the convex expansion of its contraction.
    if (auto why = expansion_mismatch(local, {side_ab, side_ba})) {
      return Rejection{"v", *why};
    }
    // (iii) both sides induce connected graphs; medianness of each side is
    // established by the recursive call together with (iv).
    std::vector<Vertex> global_ab;
    std::vector<Vertex> global_ba;
    for (Vertex v : side_ab) global_ab.push_back(block[v]);
    for (Vertex v : side_ba) global_ba.push_back(block[v]);
    for (const auto* side : {&global_ab, &global_ba}) {
      if (!induces_connected(graph_, *side)) return Rejection{"iii", set_text(*side)};
    }
    // (iv) recurse.
    for (const auto* side : {&global_ab, &global_ba}) {
      if (auto rejection = check(*side, depth + 1)) return rejection;
    }
    return std::nullopt;
  }

  std::vector<std::string> take_trace() { return std::move(trace_); }

 private:
  static std::optional<std::string> expansion_mismatch(const Graph& g, const Halfspaces& split) {
    const Contraction contracted = contract_split(g, split);
    std::optional<Expansion> expanded;
    try {
      expanded = convex_expansion(contracted.graph, contracted.image);
    } catch (const GraphError& e) {
      return std::string(e.what());
    }
    if (expanded->graph.order() != g.order() || expanded->graph.size() != g.size()) {
      return "expansion has " + std::to_string(expanded->graph.order()) + " vertices and " +
             std::to_string(expanded->graph.size()) + " edges";
    }
    std::map<std::pair<Vertex, Side>, Vertex> by_origin;
    for (Vertex y = 0; y < expanded->graph.order(); ++y) {
      by_origin[{expanded->origin[y].origin, expanded->origin[y].side}] = y;
    }
    std::vector<char> in_first(g.order(), 0);
    for (Vertex v : split.w1) in_first[v] = 1;
    std::vector<Vertex> image(g.order());
    std::vector<char> hit(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
      auto it = by_origin.find({contracted.vertex_map[x], in_first[x] ? Side::first : Side::second});
      if (it == by_origin.end() || hit[it->second]) return "vertex " + std::to_string(x) + " has no distinct image";
      image[x] = it->second;
      hit[it->second] = 1;
    }
    for (const Edge& e : g.edges()) {
      if (!expanded->graph.adjacent(image[e.u], image[e.v])) {
        return "edge " + edge_text(e.u, e.v) + " missing from expansion";
      }
    }
    return std::nullopt;
  }

  std::span<const LinearOrder> domain_;
  const Graph& graph_;
  int m_;
  std::vector<std::string> trace_;
};

}  // namespace

RecognitionResult recognize(const Profile& p) {
  Reduction reduction = reduce(p);
  RecognitionResult result{false, std::move(reduction.profile), std::move(reduction.voter_class)};
  const std::vector<LinearOrder>& domain = result.reduced.orders();
  NeighborGraph neighbours = build_neighbor_graph(domain);

  std::vector<Vertex> all(domain.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  Recognizer recognizer(domain, neighbours.graph, result.reduced.alternatives());
  std::optional<Rejection> rejection = recognizer.check(all, 0);
  result.trace = recognizer.take_trace();
  if (!rejection && !(is_median_graph(neighbours.graph) && is_intermediate(result.reduced, neighbours.graph))) {
    rejection = Rejection{"final", "neighbour graph failed the direct median/intermediate check"};
  }
  if (rejection) {
    result.rejection = std::move(rejection);
    return result;
  }
  result.accepted = true;
  result.graph = std::move(neighbours.graph);
  result.placement = std::move(neighbours.vertex_of_order);
  return result;
}

}  // namespace medianvote
