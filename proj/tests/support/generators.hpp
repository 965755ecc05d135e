#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "medianvote/chamberlin_courant.hpp"
#include "medianvote/graph.hpp"
#include "medianvote/preference.hpp"
#include "medianvote/text_io.hpp"

namespace medianvote::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// "acbd" -> order over a=0, b=1, ...
inline LinearOrder order_of(const std::string& letters) {
  std::vector<Alternative> ranking;
  for (char c : letters) ranking.push_back(c - 'a');
  return LinearOrder(std::move(ranking));
}

inline Profile profile_of(const std::vector<std::string>& rows) {
  std::vector<LinearOrder> orders;
  for (const std::string& row : rows) orders.push_back(order_of(row));
  const int m = orders.front().size();
  return Profile(m, std::move(orders));
}

inline std::string fixture(const std::string& name) { return std::string(MEDIANVOTE_FIXTURES) + "/" + name; }

inline std::vector<LinearOrder> all_orders(int m) {
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::vector<LinearOrder> out;
  do {
    out.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

inline LinearOrder random_order(int m, Rng& rng) {
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  return LinearOrder(std::move(r));
}

inline Profile random_profile(int n, int m, Rng& rng) {
  std::vector<LinearOrder> orders;
  for (int i = 0; i < n; ++i) orders.push_back(random_order(m, rng));
  return Profile(m, std::move(orders));
}

// Random recursive tree with shuffled labels.
inline Graph random_tree(int n, Rng& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(Edge::make(label[i], label[uniform(rng, 0, i - 1)]));
  return Graph(n, std::move(edges));
}

// Walks the tree from vertex 0; every edge either copies the order or swaps
// one adjacent pair that no other edge has swapped, so each pair flips on at
// most one edge and every V_ab is a subtree side.
inline Profile single_crossing_on_tree(const Graph& tree, int m, Rng& rng, double copy_probability = 0.2) {
  const int n = tree.order();
  std::vector<std::vector<Alternative>> rank(n);
  std::vector<char> seen(n, 0);
  std::set<std::pair<Alternative, Alternative>> used;
  const LinearOrder root = random_order(m, rng);
  rank[0].assign(root.ranking().begin(), root.ranking().end());
  seen[0] = 1;
  std::vector<Vertex> queue{0};
  std::bernoulli_distribution copy(copy_probability);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    for (Vertex y : tree.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      queue.push_back(y);
      rank[y] = rank[x];
      if (copy(rng)) continue;
      std::vector<int> free;
      for (int p = 0; p + 1 < m; ++p) {
        const auto key = std::minmax(rank[y][p], rank[y][p + 1]);
        if (!used.contains({key.first, key.second})) free.push_back(p);
      }
      if (free.empty()) continue;
      const int p = free[uniform(rng, 0, static_cast<int>(free.size()) - 1)];
      const auto key = std::minmax(rank[y][p], rank[y][p + 1]);
      used.insert({key.first, key.second});
      std::swap(rank[y][p], rank[y][p + 1]);
    }
  }
  std::vector<LinearOrder> orders;
  for (auto& r : rank) orders.emplace_back(std::move(r));
  return Profile(m, std::move(orders));
}

// Non-negative values, non-decreasing along each voter's ranking.
inline Misrepresentation random_monotone_table(const Profile& p, Rng& rng) {
  std::vector<std::vector<Rational>> rows;
  for (const LinearOrder& r : p.orders()) {
    std::vector<Rational> values;
    for (int i = 0; i < p.alternatives(); ++i) values.emplace_back(uniform(rng, 0, 12), uniform(rng, 1, 3));
    std::sort(values.begin(), values.end());
    std::vector<Rational> row(p.alternatives());
    for (int i = 0; i < p.alternatives(); ++i) row[r.at(i)] = values[i];
    rows.push_back(std::move(row));
  }
  return Misrepresentation::table(std::move(rows));
}

// Each voter approves a random non-empty prefix of their ranking.
inline Misrepresentation random_approval(const Profile& p, Rng& rng) {
  std::vector<std::vector<Alternative>> approved;
  for (const LinearOrder& r : p.orders()) {
    const int top = uniform(rng, 1, p.alternatives());
    approved.emplace_back(r.ranking().begin(), r.ranking().begin() + top);
  }
  return Misrepresentation::approval(approved, p.alternatives());
}

}  // namespace medianvote::testing
