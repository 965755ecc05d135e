#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medianvote/graph.hpp"
#include "medianvote/preference.hpp"

namespace medianvote {

using OrderedPair = std::pair<Alternative, Alternative>;

/// Every V_ab is geodesically convex in g (voter i sits on vertex i).
/// Pairs are checked in parallel. Throws ProfileError on a size mismatch.
bool is_intermediate(const Profile& p, const Graph& g);

/// Every shortest path of g carries a classically single-crossing
/// subprofile. Enumerates geodesics explicitly; meant as a cross-check of
/// is_intermediate on small graphs.
bool check_condition_iii(const Profile& p, const Graph& g);

// Edge from a voter preferring a to b (`from`) to one preferring b to a (`to`),
// with every ordered pair the edge separates.
struct CutEdge {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<OrderedPair> signature;  // sorted
  bool operator==(const CutEdge&) const = default;
};

/// Pairs (c,d) with c over d at `from` and d over c at `to`.
std::vector<OrderedPair> separated_pairs(const LinearOrder& from, const LinearOrder& to);

/// Edges crossing the (V_ab, V_ba) bipartition, sorted by (from, to).
std::vector<CutEdge> ab_cuts(const Profile& p, const Graph& g, Alternative a, Alternative b);

struct NeighborGraph {
  Graph graph;
  std::vector<Vertex> vertex_of_order;  // domain index -> vertex
};

/// Joins P and Q iff no third member of the domain lies between them.
/// Throws ProfileError on repeated orders.
NeighborGraph build_neighbor_graph(std::span<const LinearOrder> domain);

// Why a profile was rejected. `condition` is one of "i", "ii", "v", "iii",
// "iv" or "final"; `witness` names the offending edges or vertex set.
struct Rejection {
  std::string condition;
  std::string witness;
};

struct RecognitionResult {
  bool accepted = false;
  Profile reduced;                        // distinct orders, first-appearance order
  std::vector<int> voter_class;           // input voter -> reduced order
  std::optional<Graph> graph;             // neighbour graph of the reduced domain
  std::vector<Vertex> placement;          // reduced order -> vertex
  std::optional<Rejection> rejection;
  std::vector<std::string> trace;         // pivot pairs visited, outermost first
};

/// Decides whether the profile is intermediate on some median graph and, if
/// so, returns that graph (built on the reduced domain).
RecognitionResult recognize(const Profile& p);

/// Exhaustive check: some median graph on |domain| vertices and some
/// placement of the reduced domain on it make the profile intermediate.
/// Throws ProfileError if the reduced profile has more than max_n orders or
/// max_n exceeds 7.
bool recognition_oracle(const Profile& p, int max_n);

/// All median graphs with exactly n vertices (n <= 7), one per isomorphism
/// class, generated by convex expansion from K1.
const std::vector<Graph>& median_graphs_of_order(int n);

}  // namespace medianvote
