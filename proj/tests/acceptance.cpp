// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "medianvote/chamberlin_courant.hpp"
#include "medianvote/intermediate.hpp"
#include "medianvote/synthesis.hpp"
#include "medianvote/text_io.hpp"
#include "support/generators.hpp"

using namespace medianvote;
namespace mt = medianvote::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

// Voter i of the profile sits on vertex i of g.
bool is_chain(const Graph& g) { return g == path_graph(g.order()); }

Verdict fixture_reproduction() {
  Verdict v;
  double worst = 0;
  auto timed = [&](const std::string& name) {
    const NamedProfile np = read_profile_file(mt::fixture(name));
    const auto start = Clock::now();
    RecognitionResult r = recognize(np.profile);
    const double elapsed = seconds_since(start);
    worst = std::max(worst, elapsed);
    v.require(elapsed < 1.0, name + " took " + std::to_string(elapsed) + " s");
    v.require(r.accepted, name + " rejected");
    return std::pair{np, std::move(r)};
  };

  const auto [a, ra] = timed("example2a.profile");
  if (ra.accepted) v.require(ra.reduced == a.profile && is_chain(*ra.graph), "example2a is not the listed path");

  const auto [b, rb] = timed("example2b.profile");
  if (rb.accepted) {
    const Graph& g = *rb.graph;
    const Vertex centre = rb.placement[1];
    bool star = g.is_tree() && g.degree(centre) == 3;
    v.require(star, "example2b graph is not a star");
    v.require(format_order(rb.reduced.order(1), b.names) == "a b c d", "example2b centre is not abcd");
  }

  const auto [c, rc] = timed("example2c.profile");
  if (rc.accepted) v.require(are_isomorphic(*rc.graph, hypercube_graph(3)), "example2c graph is not the 3-cube");

  v.detail << "3 profiles, slowest recognition " << worst << " s";
  return v;
}

Verdict condorcet_on_synthesized() {
  Verdict v;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_median_graph(1 + static_cast<int>(seed % 10), seed);
    const Profile p = synthesize_profile(g);
    const bool transitive = condorcet_oracle(p.orders(), 5);
    v.require(transitive, "seed " + std::to_string(seed) + " has a majority cycle");
    ++checked;
  }
  v.detail << checked << " graphs, multiplicity totals 1..5";
  return v;
}

Verdict synthesis_bound() {
  Verdict v;
  int checked = 0;
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const Graph g = random_median_graph(1 + static_cast<int>(seed % 10), seed);
    const Profile p = synthesize_profile(g);
    const std::string tag = "seed " + std::to_string(seed);
    v.require(p.is_reduced(), tag + " not reduced");
    v.require(is_intermediate(p, g), tag + " not intermediate");
    v.require(p.alternatives() <= g.order(), tag + " uses too many alternatives");
    const RecognitionResult r = recognize(p);
    v.require(r.accepted && are_isomorphic(*r.graph, g), tag + " does not round-trip");
    ++checked;
  }
  v.detail << checked << " graphs with n <= 10";
  return v;
}

Verdict star_lower_bound() {
  Verdict v;
  const auto start = Clock::now();
  v.require(!find_reduced_intermediate_profile(star_graph(3), 2), "S3 has a 2-alternative profile");
  v.require(!find_reduced_intermediate_profile(star_graph(4), 3), "S4 has a 3-alternative profile");
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60.0, "search took " + std::to_string(elapsed) + " s");
  v.detail << "exhaustive search " << elapsed << " s";
  return v;
}

// Every set of 1..5 distinct orders over m <= 4 alternatives.
Verdict recognition_vs_oracle() {
  Verdict v;
  std::vector<Profile> instances;
  for (int m = 1; m <= 4; ++m) {
    const std::vector<LinearOrder> orders = mt::all_orders(m);
    const int total = static_cast<int>(orders.size());
    std::vector<int> pick;
    auto extend = [&](auto&& self, int next) -> void {
      if (!pick.empty()) {
        std::vector<LinearOrder> chosen;
        for (int i : pick) chosen.push_back(orders[i]);
        instances.emplace_back(m, std::move(chosen));
      }
      if (pick.size() == 5) return;
      for (int i = next; i < total; ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    extend(extend, 0);
  }
  const auto start = Clock::now();
  median_graphs_of_order(5);  // build the shared table before going parallel
  const int n = static_cast<int>(instances.size());
  int disagreements = 0;
  int accepted = 0;
  int first_bad = -1;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : disagreements, accepted)
  for (int i = 0; i < n; ++i) {
    const bool fast = recognize(instances[i]).accepted;
    const bool slow = recognition_oracle(instances[i], 5);
    accepted += fast;
    if (fast != slow) {
      ++disagreements;
#pragma omp critical
      if (first_bad < 0 || i < first_bad) first_bad = i;
    }
  }
  v.require(disagreements == 0, "instance " + std::to_string(first_bad) + " disagrees");
  v.detail << "full enumeration: " << n << " profiles, " << accepted << " accepted, " << disagreements
           << " disagreements, " << seconds_since(start) << " s";
  return v;
}

Verdict convexity_vs_geodesics() {
  Verdict v;
  mt::Rng rng(2024);
  int positives = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_median_graph(1 + i % 10, 7000 + i);
    Profile p = synthesize_profile(g);
    switch (i % 4) {
      case 0:
        p = mt::random_profile(g.order(), 3 + i % 2, rng);
        break;
      case 1:
        break;
      case 2: {
        std::vector<int> perm(p.voters());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        p = p.permuted(perm);
        break;
      }
      default: {
        // One adjacent transposition in one voter.
        std::vector<LinearOrder> orders = p.orders();
        const int voter = mt::uniform(rng, 0, p.voters() - 1);
        if (p.alternatives() > 1) {
          std::vector<Alternative> r(orders[voter].ranking().begin(), orders[voter].ranking().end());
          const int pos = mt::uniform(rng, 0, p.alternatives() - 2);
          std::swap(r[pos], r[pos + 1]);
          orders[voter] = LinearOrder(std::move(r));
        }
        p = Profile(p.alternatives(), std::move(orders));
      }
    }
    const bool convex = is_intermediate(p, g);
    positives += convex;
    v.require(convex == check_condition_iii(p, g), "pair " + std::to_string(i) + " disagrees");
  }
  v.detail << "1000 pairs, " << positives << " intermediate";
  return v;
}

Verdict cc_oracle_equivalence() {
  Verdict v;
  mt::Rng rng(31337);
  long comparisons = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 6; ++m) {
      auto compare = [&](const Profile& p, const Graph& tree, const Misrepresentation& r, const char* kind) {
        for (Objective obj : {Objective::utilitarian, Objective::egalitarian}) {
          for (int k = 1; k <= std::min(3, m); ++k) {
            const Rational dp = cc_tree_dp(p, tree, k, r, obj).phi;
            const Rational brute = cc_brute_force(p, k, r, obj).phi;
            ++comparisons;
            v.require(dp == brute, std::string(kind) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                       " k=" + std::to_string(k) + ": " + to_string(dp) + " vs " + to_string(brute));
          }
        }
      };
      for (int rep = 0; rep < 5; ++rep) {
        const Graph tree = mt::random_tree(n, rng);
        const Profile p = mt::single_crossing_on_tree(tree, m, rng);
        compare(p, tree, borda(m), "borda");
        compare(p, tree, mt::random_approval(p, rng), "approval");
      }
      for (int rep = 0; rep < 50; ++rep) {
        const Graph tree = mt::random_tree(n, rng);
        const Profile p = mt::single_crossing_on_tree(tree, m, rng);
        compare(p, tree, mt::random_monotone_table(p, rng), "table");
      }
    }
  }
  v.detail << comparisons << " (instance, objective, k) comparisons";
  return v;
}

Verdict complexity_smoke() {
  Verdict v;
  mt::Rng rng(99);
  const Graph path = path_graph(200);
  const Profile p = mt::single_crossing_on_tree(path, 20, rng, 0.0);
  double worst_dp = 0;
  for (Objective obj : {Objective::utilitarian, Objective::egalitarian}) {
    const auto start = Clock::now();
    cc_tree_dp(p, path, 5, borda(20), obj);
    worst_dp = std::max(worst_dp, seconds_since(start));
  }
  v.require(worst_dp < 5.0, "cc_tree_dp took " + std::to_string(worst_dp) + " s");

  std::vector<LinearOrder> orders;
  while (orders.size() < 50) {
    LinearOrder r = mt::random_order(8, rng);
    if (std::find(orders.begin(), orders.end(), r) == orders.end()) orders.push_back(std::move(r));
  }
  const auto start = Clock::now();
  build_neighbor_graph(orders);
  const double neighbours = seconds_since(start);
  v.require(neighbours < 5.0, "build_neighbor_graph took " + std::to_string(neighbours) + " s");
  v.detail << "cc_tree_dp(200x20, k=5) " << worst_dp << " s, build_neighbor_graph(50x8) " << neighbours << " s";
  return v;
}

Verdict cut_invariants() {
  Verdict v;
  std::vector<Profile> corpus;
  for (const char* name : {"example2a.profile", "example2b.profile", "example2c.profile", "cycle3.profile"}) {
    corpus.push_back(read_profile_file(mt::fixture(name)).profile);
  }
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    corpus.push_back(synthesize_profile(random_median_graph(1 + static_cast<int>(seed % 12), 9000 + seed)));
  }
  mt::Rng rng(5);
  for (int i = 0; i < 300; ++i) corpus.push_back(mt::random_profile(2 + i % 5, 3 + i % 2, rng));

  int accepted = 0;
  long cuts_checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const RecognitionResult r = recognize(corpus[i]);
    if (!r.accepted) continue;
    ++accepted;
    const Graph& g = *r.graph;
    const DistanceMatrix dm = all_pairs_distances(g);
    const int m = r.reduced.alternatives();
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        if (a == b) continue;
        const std::vector<CutEdge> cuts = ab_cuts(r.reduced, g, a, b);
        const std::vector<int> side = v_ab(r.reduced, a, b);
        for (const CutEdge& e : cuts) {
          ++cuts_checked;
          v.require(e.signature == cuts.front().signature, "corpus item " + std::to_string(i) + " signatures differ");
          std::vector<int> closer;
          for (Vertex w = 0; w < g.order(); ++w) {
            if (dm(w, e.from) < dm(w, e.to)) closer.push_back(w);
          }
          v.require(closer == side, "corpus item " + std::to_string(i) + " halfspace differs from V_ab");
        }
      }
    }
  }
  v.detail << accepted << " accepted recognitions, " << cuts_checked << " cut edges";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 fixture reproduction", fixture_reproduction},
      {"2 Condorcet domains of synthesized profiles", condorcet_on_synthesized},
      {"3 synthesis uses at most n alternatives and round-trips", synthesis_bound},
      {"4 stars need as many alternatives as vertices", star_lower_bound},
      {"5 recognize agrees with the exhaustive oracle", recognition_vs_oracle},
      {"6 convex voter sets iff single-crossing geodesics", convexity_vs_geodesics},
      {"7 tree DP equals brute-force Chamberlin-Courant", cc_oracle_equivalence},
      {"8 complexity smoke test", complexity_smoke},
      {"9 cut halfspaces and equal signatures", cut_invariants},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << " | " << v.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
