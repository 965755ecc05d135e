#include "doctest.h"
#include "medianvote/intermediate.hpp"
#include "medianvote/synthesis.hpp"
#include "medianvote/text_io.hpp"
#include "support/generators.hpp"

using namespace medianvote;
using testing::order_of;
using testing::profile_of;

namespace {

const Profile example_a = profile_of({"abcd", "bacd", "bcad", "cbad"});
const Profile example_b = profile_of({"acbd", "abcd", "abdc", "bacd"});
const Profile example_c = profile_of({"abcd", "abdc", "bacd", "badc", "cdab", "dcab", "cdba", "dcba"});

Graph star_around_second() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("fixture profiles are intermediate on their graphs") {
  CHECK(is_intermediate(example_a, path_graph(4)));
  CHECK(is_intermediate(example_b, star_around_second()));
  CHECK_FALSE(is_intermediate(example_b, path_graph(4)));
  CHECK_FALSE(is_intermediate(example_c, path_graph(8)));
  CHECK_THROWS_AS(is_intermediate(example_a, path_graph(3)), ProfileError);
}

TEST_CASE("separated pairs and ab-cuts") {
  CHECK(separated_pairs(order_of("abcd"), order_of("bacd")) == std::vector<OrderedPair>{{0, 1}});
  CHECK(separated_pairs(order_of("abc"), order_of("cba")) == std::vector<OrderedPair>{{0, 1}, {0, 2}, {1, 2}});

  const RecognitionResult r = recognize(example_c);
  REQUIRE(r.accepted);
  const std::vector<CutEdge> cuts = ab_cuts(r.reduced, *r.graph, 0, 1);
  CHECK(cuts.size() == 4);
  for (const CutEdge& e : cuts) {
    CHECK(e.signature == cuts.front().signature);
    CHECK(r.reduced.order(e.from).prefers(0, 1));
    CHECK(r.reduced.order(e.to).prefers(1, 0));
  }
}

TEST_CASE("neighbour graph of small domains") {
  const NeighborGraph path = build_neighbor_graph(example_a.orders());
  CHECK(path.graph == path_graph(4));
  const NeighborGraph triangle = build_neighbor_graph(profile_of({"abc", "bca", "cab"}).orders());
  CHECK(triangle.graph == cycle_graph(3));
  CHECK_THROWS_AS(build_neighbor_graph(profile_of({"ab", "ab"}).orders()), ProfileError);

  // Always connected: the closest order between two others is adjacent to one of them.
  testing::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = reduce(testing::random_profile(1 + trial % 9, 3 + trial % 3, rng)).profile;
    CHECK_NOTHROW(build_neighbor_graph(p.orders()));
  }
}

TEST_CASE("recognize accepts the fixture profiles with the expected graphs") {
  const RecognitionResult a = recognize(example_a);
  REQUIRE(a.accepted);
  CHECK(*a.graph == path_graph(4));

  const RecognitionResult b = recognize(example_b);
  REQUIRE(b.accepted);
  CHECK(*b.graph == star_around_second());
  CHECK(b.reduced.order(1) == order_of("abcd"));

  const RecognitionResult c = recognize(example_c);
  REQUIRE(c.accepted);
  CHECK(are_isomorphic(*c.graph, hypercube_graph(3)));
  CHECK(is_intermediate(c.reduced, *c.graph));
}

TEST_CASE("recognize rejects the Condorcet cycle at the matching condition") {
  const RecognitionResult r = recognize(profile_of({"abc", "bca", "cab"}));
  CHECK_FALSE(r.accepted);
  REQUIRE(r.rejection.has_value());
  CHECK(r.rejection->condition == "i");
  CHECK_FALSE(r.graph.has_value());
}

TEST_CASE("recognize reduces repeated voters") {
  const Profile p(4, {order_of("abcd"), order_of("bacd"), order_of("abcd"), order_of("bcad")}, {1, 2, 3, 1});
  const RecognitionResult r = recognize(p);
  REQUIRE(r.accepted);
  CHECK(r.reduced.voters() == 3);
  CHECK(r.voter_class == std::vector<int>{0, 1, 0, 2});
  CHECK(r.reduced.multiplicities() == std::vector<std::int64_t>{4, 2, 1});
  CHECK(recognize(profile_of({"abc", "abc"})).accepted);
}

TEST_CASE("intermediateness and geodesic single-crossing agree") {
  testing::Rng rng(21);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_median_graph(1 + trial % 9, 4000 + trial);
    Profile p = trial % 3 == 0 ? testing::random_profile(g.order(), 3, rng) : synthesize_profile(g);
    if (trial % 3 == 2 && p.voters() > 1) {
      // Swap two voters: sometimes still intermediate, usually not.
      std::vector<int> perm(p.voters());
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[testing::uniform(rng, 1, p.voters() - 1)]);
      p = p.permuted(perm);
    }
    const bool convex = is_intermediate(p, g);
    positives += convex;
    CHECK(convex == check_condition_iii(p, g));
  }
  CHECK(positives > 100);
}

TEST_CASE("accepted recognitions satisfy the cut invariants") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const Profile p = trial % 2 ? synthesize_profile(random_median_graph(2 + trial % 8, trial))
                                : testing::random_profile(2 + trial % 5, 3 + trial % 2, rng);
    const RecognitionResult r = recognize(p);
    if (!r.accepted) continue;
    const Graph& g = *r.graph;
    CHECK(is_median_graph(g));
    CHECK(is_intermediate(r.reduced, g));
    const DistanceMatrix dm = all_pairs_distances(g);
    const int m = r.reduced.alternatives();
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b) continue;
        const std::vector<int> side = v_ab(r.reduced, a, b);
        for (const CutEdge& e : ab_cuts(r.reduced, g, a, b)) {
          CHECK(e.signature == ab_cuts(r.reduced, g, a, b).front().signature);
          std::vector<int> closer;
          for (Vertex w = 0; w < g.order(); ++w) {
            if (dm(w, e.from) < dm(w, e.to)) closer.push_back(w);
          }
          CHECK(closer == side);
        }
      }
    }
  }
}

TEST_CASE("recognize agrees with the exhaustive oracle on random small profiles") {
  testing::Rng rng(41);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = testing::random_profile(1 + trial % 6, 3 + trial % 2, rng);
    const bool fast = recognize(p).accepted;
    accepted += fast;
    CHECK(fast == recognition_oracle(p, 7));
  }
  CHECK(accepted > 0);
  CHECK_THROWS_AS(recognition_oracle(example_c, 8), ProfileError);
  CHECK_THROWS_AS(recognition_oracle(example_c, 5), ProfileError);
}
