#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "medianvote/error.hpp"

namespace medianvote {

using Vertex = int;
using VertexMask = boost::dynamic_bitset<std::uint64_t>;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Connected simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Construction rejects loops, parallel edges, ids out
/// of range and disconnected inputs, so every Graph value is a valid
/// candidate for the median-graph machinery.
class Graph {
 public:
  /// The one-vertex graph K1.
  Graph() : Graph(1, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool is_tree() const noexcept { return edges_.size() + 1 == static_cast<std::size_t>(n_); }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// True iff the edge list spans a connected graph on n vertices (n >= 1).
bool is_connected(int n, std::span<const Edge> edges);

/// Subgraph induced on `keep` (ids renumbered by position in `keep`).
/// Throws GraphError when the induced subgraph is disconnected.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
bool induces_connected(const Graph& g, std::span<const Vertex> keep);

// Hop-count distances, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  std::span<int> row(Vertex u) { return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)}; }
  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<int> d_;
};

/// All-pairs BFS distances; one BFS per source, sources run in parallel.
DistanceMatrix all_pairs_distances(const Graph& g);

/// d(u,v) == d(u,w) + d(w,v).
bool is_between(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex w, Vertex v);

/// Geodesic convexity of `s` (duplicates allowed, order irrelevant).
bool is_convex(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> s);

class MultipleMediansError : public GraphError {
 public:
  explicit MultipleMediansError(std::array<Vertex, 3> triple);
  const std::array<Vertex, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<Vertex, 3> triple_;
};

/// The unique vertex lying between every pair of {u, v, w}; nullopt when no
/// vertex does. Throws MultipleMediansError when more than one does.
std::optional<Vertex> median(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v, Vertex w);

/// Exhaustive triple check. Parallel over the first vertex of each triple.
bool is_median_graph(const Graph& g);
bool is_bipartite(const Graph& g);

/// Geodesic intervals I(u,v) as vertex masks, precomputed once per graph.
/// Backs the bitset convexity tests used by the hot kernels.
class IntervalIndex {
 public:
  explicit IntervalIndex(const DistanceMatrix& dm);

  int order() const noexcept { return n_; }
  const VertexMask& interval(Vertex u, Vertex v) const { return intervals_[u * n_ + v]; }
  bool is_convex(const VertexMask& s) const;
  VertexMask hull(VertexMask s) const;

 private:
  int n_;
  std::vector<VertexMask> intervals_;
};

VertexMask to_mask(int n, std::span<const Vertex> vertices);
std::vector<Vertex> from_mask(const VertexMask& mask);

// Two vertex sets. For expansion inputs W1 u W2 = V with W1 n W2 non-empty;
// for edge splits a disjoint bipartition. Both kept sorted.
struct Halfspaces {
  std::vector<Vertex> w1;
  std::vector<Vertex> w2;
  bool operator==(const Halfspaces&) const = default;
};

enum class Side : std::uint8_t { first, second };

struct VertexOrigin {
  Vertex origin = 0;
  Side side = Side::first;
  bool operator==(const VertexOrigin&) const = default;
};

// Result of a convex expansion. Vertices outside W1 n W2 keep their id; for
// v in W1 n W2 the copy v1 keeps id v and v2 gets id n + (rank of v in W1 n W2).
struct Expansion {
  Graph graph;
  std::vector<VertexOrigin> origin;
};

/// Mulder's convex expansion. Throws GraphError on any violated precondition
/// (cover, intersection, cross edges, convexity).
Expansion convex_expansion(const Graph& g, const Halfspaces& h);

/// The distance bipartition induced by edge e = (u,v): ({w : d(w,u) < d(w,v)},
/// {w : d(w,u) > d(w,v)}). Throws GraphError("graph not bipartite") on a tie.
Halfspaces edge_split(const Graph& g, const DistanceMatrix& dm, Edge e);

struct Contraction {
  Graph graph;
  std::vector<Vertex> vertex_map;  // old vertex -> contracted vertex
  Halfspaces image;                // images of the two input halfspaces
};

/// Contracts every edge joining h.w1 to h.w2. Contracted ids are assigned in
/// order of the smallest original vertex of each class.
Contraction contract_split(const Graph& g, const Halfspaces& h);

/// Backtracking isomorphism search; returns a map g-vertex -> h-vertex.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

/// Canonical adjacency code by brute force over all permutations (n <= 8).
std::vector<std::uint8_t> canonical_code(const Graph& g);

// Common shapes used by fixtures, generators and tests.
Graph path_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, centre 0
Graph cycle_graph(int n);
Graph hypercube_graph(int dim);
Graph grid_graph(int rows, int cols);

}  // namespace medianvote
