#include "doctest.h"
#include "medianvote/intermediate.hpp"
#include "medianvote/synthesis.hpp"
#include "support/generators.hpp"

using namespace medianvote;
using testing::order_of;

TEST_CASE("clone placement") {
  const LinearOrder r = order_of("bac");
  CHECK(clone_alternative(r, 0, Side::first) == LinearOrder({1, 0, 3, 2}));
  CHECK(clone_alternative(r, 0, Side::second) == LinearOrder({1, 3, 0, 2}));
}

TEST_CASE("Mulder decomposition replays to the source graph") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = random_median_graph(1 + seed % 12, seed);
    const ExpansionHistory h = mulder_decompose(g);
    if (g.is_tree()) CHECK(h.steps.size() + 1 == static_cast<std::size_t>(g.order()));
    CHECK(replay(h) == g);
    if (!h.steps.empty()) CHECK(h.steps.front().base == Graph());
  }
  CHECK_THROWS_AS(mulder_decompose(cycle_graph(6)), GraphError);
}

TEST_CASE("synthesized profiles are reduced and intermediate with few alternatives") {
  const std::vector<Graph> named{Graph(), path_graph(5), star_graph(5), hypercube_graph(3), grid_graph(3, 3)};
  for (const Graph& g : named) {
    const Profile p = synthesize_profile(g);
    CHECK(p.voters() == g.order());
    CHECK(p.is_reduced());
    CHECK(is_intermediate(p, g));
    CHECK(p.alternatives() <= g.order());
  }
  // A path needs one alternative per edge plus one.
  CHECK(synthesize_profile(path_graph(5)).alternatives() == 5);
  // Each Theta class of the cube adds a single alternative.
  CHECK(synthesize_profile(hypercube_graph(3)).alternatives() == 4);
  CHECK_THROWS_AS(synthesize_profile(cycle_graph(6)), GraphError);
}

TEST_CASE("stars need one alternative per vertex") {
  for (int n = 2; n <= 4; ++n) {
    const Graph star = star_graph(n);
    const Profile p = synthesize_profile(star);
    CHECK(p.alternatives() == n);
    CHECK(find_reduced_intermediate_profile(star, n).has_value());
    CHECK_FALSE(find_reduced_intermediate_profile(star, n - 1).has_value());
  }
  // A path on 4 vertices fits in 3 alternatives, so the search is not vacuous.
  const auto path_profile = find_reduced_intermediate_profile(path_graph(4), 3);
  REQUIRE(path_profile.has_value());
  CHECK(is_intermediate(*path_profile, path_graph(4)));
}
