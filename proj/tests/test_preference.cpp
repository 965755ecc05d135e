#include <sstream>

#include "doctest.h"
#include "medianvote/preference.hpp"
#include "medianvote/text_io.hpp"
#include "support/generators.hpp"

using namespace medianvote;
using testing::order_of;
using testing::profile_of;

namespace {

// Majority counts straight from the definition.
int supporters(const Profile& p, Alternative a, Alternative b) {
  std::int64_t count = 0;
  for (int v = 0; v < p.voters(); ++v) {
    if (p.order(v).prefers(a, b)) count += p.multiplicity(v);
  }
  return static_cast<int>(count);
}

}  // namespace

TEST_CASE("linear orders validate permutations") {
  CHECK_THROWS_AS(LinearOrder({0, 0, 1}), ProfileError);
  CHECK_THROWS_AS(LinearOrder({0, 3, 1}), ProfileError);
  const LinearOrder r = order_of("cab");
  CHECK(r.position(2) == 1);
  CHECK(r.position(1) == 3);
  CHECK(r.prefers(0, 1));
  CHECK_FALSE(r.prefers(1, 2));
}

TEST_CASE("order betweenness") {
  CHECK(is_order_between(order_of("abc"), order_of("acb"), order_of("cba")));
  CHECK(is_order_between(order_of("abc"), order_of("abc"), order_of("cba")));
  CHECK_FALSE(is_order_between(order_of("abc"), order_of("bac"), order_of("acb")));
  const std::vector<LinearOrder> domain{order_of("abc"), order_of("bac"), order_of("bca"), order_of("acb")};
  CHECK(interval(domain, order_of("abc"), order_of("bca")) ==
        std::vector<LinearOrder>{order_of("abc"), order_of("bac"), order_of("bca")});

  // Definition check against an explicit pair loop.
  testing::Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + trial % 5;
    const LinearOrder p = testing::random_order(m, rng);
    const LinearOrder r = testing::random_order(m, rng);
    const LinearOrder q = testing::random_order(m, rng);
    bool expected = true;
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a != b && p.prefers(a, b) && q.prefers(a, b) && !r.prefers(a, b)) expected = false;
      }
    }
    CHECK(is_order_between(p, r, q) == expected);
  }
}

TEST_CASE("voter sets V_ab") {
  const Profile p = profile_of({"abc", "bac", "bca", "cba"});
  CHECK(v_ab(p, 0, 1) == std::vector<int>{0});
  CHECK(v_ab(p, 1, 0) == std::vector<int>{1, 2, 3});
  CHECK(v_ab(p, 2, 0) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(v_ab(p, 1, 1), ProfileError);
}

TEST_CASE("majority relation honours multiplicities") {
  const Profile p(3, {order_of("abc"), order_of("bca")}, {2, 1});
  const MajorityRelation mr = majority_relation(p);
  CHECK(mr.strictly_prefers(0, 1));
  CHECK(mr.strictly_prefers(1, 2));
  CHECK(mr.strictly_prefers(0, 2));
  CHECK(is_strict_transitive(mr));
  CHECK(representative_voter(p) == 0);

  const MajorityRelation tied = majority_relation(profile_of({"abc", "bac"}));
  CHECK(tied.weakly_prefers(0, 1));
  CHECK(tied.weakly_prefers(1, 0));
  CHECK_FALSE(tied.strictly_prefers(0, 1));
  CHECK(tied.strictly_prefers(1, 2));

  const Profile cycle = profile_of({"abc", "bca", "cab"});
  CHECK_FALSE(is_strict_transitive(majority_relation(cycle)));
  CHECK_FALSE(representative_voter(cycle).has_value());

  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile q = testing::random_profile(1 + trial % 7, 2 + trial % 4, rng);
    const MajorityRelation r = majority_relation(q);
    for (Alternative a = 0; a < q.alternatives(); ++a) {
      for (Alternative b = 0; b < q.alternatives(); ++b) {
        if (a == b) continue;
        CHECK(r.weakly_prefers(a, b) == (supporters(q, a, b) >= supporters(q, b, a)));
        CHECK(r.strictly_prefers(a, b) == (supporters(q, a, b) > supporters(q, b, a)));
      }
    }
  }
}

TEST_CASE("reduction keeps first appearances and sums weights") {
  const Profile p(3, {order_of("bac"), order_of("abc"), order_of("bac")}, {1, 2, 3});
  const Reduction r = reduce(p);
  CHECK(r.profile.orders() == std::vector<LinearOrder>{order_of("bac"), order_of("abc")});
  CHECK(r.profile.multiplicities() == std::vector<std::int64_t>{4, 2});
  CHECK(r.voter_class == std::vector<int>{0, 1, 0});
  CHECK(r.profile.is_reduced());
  CHECK_FALSE(p.is_reduced());
}

TEST_CASE("Condorcet domains: triple test agrees with the multiplicity oracle") {
  const std::vector<LinearOrder> cycle{order_of("abc"), order_of("bca"), order_of("cab")};
  CHECK(find_cyclic_triple(cycle).has_value());
  CHECK_FALSE(is_condorcet_domain(cycle));
  CHECK_FALSE(condorcet_oracle(cycle, 3));
  const std::vector<LinearOrder> reverse_cycle{order_of("acb"), order_of("cba"), order_of("bac")};
  CHECK_FALSE(is_condorcet_domain(reverse_cycle));

  testing::Rng rng(17);
  int negatives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 3 + trial % 2;
    const Profile p = testing::random_profile(2 + trial % 4, m, rng);
    const std::vector<LinearOrder> domain = domain_of(p);
    const bool triple_test = is_condorcet_domain(domain);
    negatives += triple_test ? 0 : 1;
    CHECK(triple_test == condorcet_oracle(domain, 5));
  }
  CHECK(negatives > 0);
}

TEST_CASE("profile text format round-trips") {
  std::istringstream in("# two voter classes\n3 3\n2x c a b\nb c a\n1* a b c\n");
  const NamedProfile np = parse_profile(in);
  CHECK(np.names == std::vector<std::string>{"c", "a", "b"});
  CHECK(np.profile.multiplicities() == std::vector<std::int64_t>{2, 1, 1});
  const std::string text = format_profile(np.profile, np.names);
  std::istringstream again(text);
  const NamedProfile back = parse_profile(again);
  CHECK(back.profile == np.profile);
  CHECK(back.names == np.names);
  CHECK(text.find("2\xC3\x97 c a b") != std::string::npos);

  const NamedProfile from_json = profile_from_json(profile_to_json(np.profile, np.names));
  CHECK(from_json.profile == np.profile);
  CHECK(from_json.names == np.names);
}

TEST_CASE("profile parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_profile(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 2\na b\nb\n") == 3);
  CHECK(line_of("2 2\na b\na a\n") == 3);
  CHECK(line_of("x 2\na b\n") == 1);
  CHECK(line_of("2 2\na b\nc d\n") == 3);
  CHECK(line_of("3 2\na b\nb a\n") == 0);
}

TEST_CASE("graph text format round-trips") {
  std::istringstream in("# path\n3\n0 1\n1 2 # tail\n");
  const Graph g = parse_graph(in);
  CHECK(g == path_graph(3));
  std::istringstream again(format_graph(g));
  CHECK(parse_graph(again) == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);

  std::istringstream bad("3\n0 1\n1 5\n");
  try {
    parse_graph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
