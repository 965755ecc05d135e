#pragma once

#include <span>

#include "medianvote/graph.hpp"
#include "medianvote/intermediate.hpp"
#include "medianvote/preference.hpp"

// Straightforward single-threaded versions of the parallel kernels. They use
// no precomputed bitsets and serve as references in tests and benchmarks.
namespace medianvote::serial {

DistanceMatrix all_pairs_distances(const Graph& g);

/// Every triple has exactly one vertex on all three geodesic intervals.
bool is_median_graph(const Graph& g);

/// Every V_ab and V_ba is convex, tested vertex by vertex on distances.
bool is_intermediate(const Profile& p, const Graph& g);

NeighborGraph build_neighbor_graph(std::span<const LinearOrder> domain);

}  // namespace medianvote::serial
