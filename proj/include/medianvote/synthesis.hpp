#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "medianvote/graph.hpp"
#include "medianvote/preference.hpp"

namespace medianvote {

// One convex expansion in a Mulder decomposition. `expanded` is
// convex_expansion(base, halves); `to_target` maps its vertices onto the ids
// of the finer graph they stand for (the next step's base, or the target).
struct ExpansionStep {
  Graph base;
  Halfspaces halves;
  Expansion expanded;
  std::vector<Vertex> to_target;
};

// Steps from K1 up to the decomposed graph.
struct ExpansionHistory {
  std::vector<ExpansionStep> steps;
};

/// Repeatedly splits along the smallest edge and contracts, until K1 is
/// left; the recorded steps run in the reverse (expanding) direction.
/// Throws GraphError if g is not a median graph.
ExpansionHistory mulder_decompose(const Graph& g);

/// Replays the history from K1; the result equals the decomposed graph.
Graph replay(const ExpansionHistory& history);

/// Inserts a new alternative (id m) as a clone of x: directly below x on the
/// first side, directly above x on the second.
LinearOrder clone_alternative(const LinearOrder& r, Alternative x, Side side);

/// Reduced profile intermediate on g (voter i on vertex i) using one
/// alternative more than the number of decomposition steps.
/// Throws GraphError on non-median input.
Profile synthesize_profile(const Graph& g);

/// Median graph with exactly n vertices grown from K1 by seeded random
/// convex expansions.
Graph random_median_graph(int n, std::uint64_t seed);

/// Exhaustive search for a reduced profile on m alternatives that is
/// intermediate on g. Desk-scale only.
std::optional<Profile> find_reduced_intermediate_profile(const Graph& g, int m);

}  // namespace medianvote
