#include "medianvote/graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <string>

namespace medianvote {

namespace {

void bfs_row(const Graph& g, Vertex source, std::span<int> out) {
  std::fill(out.begin(), out.end(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  out[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (out[y] < 0) {
        out[y] = out[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
}

std::string triple_text(const std::array<Vertex, 3>& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(n > 0 ? n : 0) {
  if (n < 1) {
    throw GraphError("graph must have at least one vertex");
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " out of range");
    }
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("parallel edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  if (!is_connected(n, edges)) {
    throw GraphError("graph not connected");
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n < 1) {
    return false;
  }
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int components = n;
  for (const Edge& e : edges) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

namespace {

std::vector<Edge> induced_edges(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back(Edge::make(local[e.u], local[e.v]));
    }
  }
  return edges;
}

}  // namespace

bool induces_connected(const Graph& g, std::span<const Vertex> keep) {
  return is_connected(static_cast<int>(keep.size()), induced_edges(g, keep));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  return Graph(static_cast<int>(keep.size()), induced_edges(g, keep));
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  std::atomic<bool> disconnected{false};
#pragma omp parallel for schedule(dynamic, 8)
  for (Vertex s = 0; s < n; ++s) {
    auto row = dm.row(s);
    bfs_row(g, s, row);
    if (std::find(row.begin(), row.end(), -1) != row.end()) {
      disconnected = true;
    }
  }
  if (disconnected) {
    throw GraphError("graph not connected");
  }
  return dm;
}

bool is_between(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex w, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, w);
  check_vertex(g, v);
  return dm(u, v) == dm(u, w) + dm(w, v);
}

bool is_convex(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> s) {
  std::vector<char> member(g.order(), 0);
  for (Vertex v : s) {
    check_vertex(g, v);
    member[v] = 1;
  }
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u >= v) {
        continue;
      }
      for (Vertex w = 0; w < g.order(); ++w) {
        if (!member[w] && dm(u, v) == dm(u, w) + dm(w, v)) {
          return false;
        }
      }
    }
  }
  return true;
}

MultipleMediansError::MultipleMediansError(std::array<Vertex, 3> triple)
    : GraphError("multiple medians for triple " + triple_text(triple) + "; graph is not median"),
      triple_(triple) {}

std::optional<Vertex> median(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w) {
  check_vertex(g, u);
  check_vertex(g, v);
  check_vertex(g, w);
  std::optional<Vertex> found;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (dm(u, v) == dm(u, x) + dm(x, v) && dm(u, w) == dm(u, x) + dm(x, w) &&
        dm(v, w) == dm(v, x) + dm(x, w)) {
      if (found) {
        throw MultipleMediansError({u, v, w});
      }
      found = x;
    }
  }
  return found;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::queue<Vertex> queue;
  colour[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        queue.push(y);
      } else if (colour[y] == colour[x]) {
        return false;
      }
    }
  }
  return true;
}

bool is_median_graph(const Graph& g) {
  const int n = g.order();
  const IntervalIndex intervals(all_pairs_distances(g));
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
  for (Vertex u = 0; u < n; ++u) {
    VertexMask common(n);
    for (Vertex v = u + 1; v < n && ok.load(std::memory_order_relaxed); ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        common = intervals.interval(u, v);
        common &= intervals.interval(u, w);
        common &= intervals.interval(v, w);
        if (common.count() != 1) {
          ok = false;
          break;
        }
      }
    }
  }
  return ok;
}

IntervalIndex::IntervalIndex(const DistanceMatrix& dm)
    : n_(dm.order()), intervals_(static_cast<std::size_t>(n_) * n_) {
#pragma omp parallel for schedule(dynamic, 4)
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u; v < n_; ++v) {
      VertexMask mask(n_);
      for (Vertex w = 0; w < n_; ++w) {
        if (dm(u, v) == dm(u, w) + dm(w, v)) {
          mask.set(w);
        }
      }
      intervals_[v * n_ + u] = mask;
      intervals_[u * n_ + v] = std::move(mask);
    }
  }
}

bool IntervalIndex::is_convex(const VertexMask& s) const {
  for (auto u = s.find_first(); u != VertexMask::npos; u = s.find_next(u)) {
    for (auto v = s.find_next(u); v != VertexMask::npos; v = s.find_next(v)) {
      if (!interval(static_cast<Vertex>(u), static_cast<Vertex>(v)).is_subset_of(s)) {
        return false;
      }
    }
  }
  return true;
}

VertexMask IntervalIndex::hull(VertexMask s) const {
  bool grown = true;
  while (grown) {
    grown = false;
    VertexMask next = s;
    for (auto u = s.find_first(); u != VertexMask::npos; u = s.find_next(u)) {
      for (auto v = s.find_next(u); v != VertexMask::npos; v = s.find_next(v)) {
        next |= interval(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
    if (next != s) {
      s = std::move(next);
      grown = true;
    }
  }
  return s;
}

VertexMask to_mask(int n, std::span<const Vertex> vertices) {
  VertexMask mask(n);
  for (Vertex v : vertices) {
    mask.set(v);
  }
  return mask;
}

std::vector<Vertex> from_mask(const VertexMask& mask) {
  std::vector<Vertex> out;
  out.reserve(mask.count());
  for (auto i = mask.find_first(); i != VertexMask::npos; i = mask.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Expansion convex_expansion(const Graph& g, const Halfspaces& h) {
  const int n = g.order();
  for (Vertex v : h.w1) check_vertex(g, v);
  for (Vertex v : h.w2) check_vertex(g, v);
  const VertexMask in1 = to_mask(n, h.w1);
  const VertexMask in2 = to_mask(n, h.w2);
  if ((in1 | in2).count() != static_cast<std::size_t>(n)) {
    throw GraphError("expansion sets do not cover the vertex set");
  }
  if (!in1.intersects(in2)) {
    throw GraphError("expansion sets do not intersect");
  }
  for (const Edge& e : g.edges()) {
    const bool only1u = in1[e.u] && !in2[e.u];
    const bool only2u = in2[e.u] && !in1[e.u];
    const bool only1v = in1[e.v] && !in2[e.v];
    const bool only2v = in2[e.v] && !in1[e.v];
    if ((only1u && only2v) || (only2u && only1v)) {
      throw GraphError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " joins W1\\W2 to W2\\W1");
    }
  }
  const IntervalIndex intervals(all_pairs_distances(g));
  if (!intervals.is_convex(in1) || !intervals.is_convex(in2)) {
    throw GraphError("expansion sets not convex");
  }

  std::vector<Vertex> second_copy(n, -1);
  std::vector<VertexOrigin> origin(n);
  int next_id = n;
  for (Vertex v = 0; v < n; ++v) {
    origin[v] = {v, in1[v] ? Side::first : Side::second};
    if (in1[v] && in2[v]) {
      second_copy[v] = next_id++;
      origin.push_back({v, Side::second});
    }
  }
  auto copy_on = [&](Vertex v, Side side) {
    return (side == Side::second && second_copy[v] >= 0) ? second_copy[v] : v;
  };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool shared_u = second_copy[e.u] >= 0;
    const bool shared_v = second_copy[e.v] >= 0;
    if (shared_u && shared_v) {
      edges.push_back(Edge::make(e.u, e.v));
      edges.push_back(Edge::make(second_copy[e.u], second_copy[e.v]));
    } else if (shared_u || shared_v) {
      // The private endpoint fixes which copy of the shared one it attaches to.
      const Vertex priv = shared_u ? e.v : e.u;
      const Vertex shared = shared_u ? e.u : e.v;
      edges.push_back(Edge::make(priv, copy_on(shared, in1[priv] ? Side::first : Side::second)));
    } else {
      edges.push_back(e);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (second_copy[v] >= 0) {
      edges.push_back(Edge::make(v, second_copy[v]));
    }
  }
  return {Graph(next_id, std::move(edges)), std::move(origin)};
}

Halfspaces edge_split(const Graph& g, const DistanceMatrix& dm, Edge e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (!g.adjacent(e.u, e.v)) {
    throw GraphError("not an edge: " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
  Halfspaces h;
  for (Vertex w = 0; w < g.order(); ++w) {
    const int du = dm(w, e.u);
    const int dv = dm(w, e.v);
    if (du == dv) {
      throw GraphError("graph not bipartite");
    }
    (du < dv ? h.w1 : h.w2).push_back(w);
  }
  return h;
}

Contraction contract_split(const Graph& g, const Halfspaces& h) {
  const int n = g.order();
  const VertexMask in1 = to_mask(n, h.w1);
  const VertexMask in2 = to_mask(n, h.w2);
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    if ((in1[e.u] && in2[e.v]) || (in2[e.u] && in1[e.v])) {
      const Vertex a = find(e.u);
      const Vertex b = find(e.v);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<Vertex> class_id(n, -1);
  std::vector<Vertex> vertex_map(n);
  int classes = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = find(v);
    if (class_id[root] < 0) {
      class_id[root] = classes++;
    }
    vertex_map[v] = class_id[root];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (vertex_map[e.u] != vertex_map[e.v]) {
      edges.push_back(Edge::make(vertex_map[e.u], vertex_map[e.v]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto image = [&](const std::vector<Vertex>& side) {
    std::vector<Vertex> out;
    for (Vertex v : side) out.push_back(vertex_map[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  Halfspaces images{image(h.w1), image(h.w2)};
  return {Graph(classes, std::move(edges)), std::move(vertex_map), std::move(images)};
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::make(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph hypercube_graph(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

}  // namespace medianvote
