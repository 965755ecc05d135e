#include "medianvote/chamberlin_courant.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace medianvote {

namespace {

// nullopt stands for +infinity.
using Cost = std::optional<Rational>;

Cost combine(const Cost& a, const Cost& b, Objective objective) {
  if (!a || !b) return std::nullopt;
  return objective == Objective::utilitarian ? *a + *b : std::max(*a, *b);
}

bool better(const Cost& a, const Cost& b) { return a && (!b || *a < *b); }

// Everything the tree solvers share once the input has been validated.
struct Instance {
  const Profile& profile;
  const Misrepresentation& r;
  Objective objective;
  int k;
  int leaf;
  std::vector<Alternative> by_leaf_rank;  // a_1 .. a_m in the leaf voter's order

  // Contribution of voter v to l(...) when represented by c.
  Rational voter_cost(int v, Alternative c) const {
    const Rational value = r(profile, v, c);
    return objective == Objective::utilitarian ? value * profile.multiplicity(v) : value;
  }
};

int smallest_leaf(const Graph& tree) {
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) <= 1) return v;
  }
  throw GraphError("tree without a leaf");
}

Instance prepare(const Profile& p, const Graph& tree, int k, const Misrepresentation& r, Objective objective) {
  if (!tree.is_tree()) throw GraphError("graph is not a tree");
  if (p.voters() != tree.order()) throw ProfileError("voter count differs from tree size");
  if (k < 1 || k > p.alternatives()) throw ProfileError("committee size must lie in 1..m");
  r.validate(p);
  if (!is_intermediate(p, tree)) throw ProfileError("not single-crossing on given tree");
  const int leaf = smallest_leaf(tree);
  const auto ranking = p.order(leaf).ranking();
  return {p, r, objective, k, leaf, std::vector<Alternative>(ranking.begin(), ranking.end())};
}

// Moves every voter to their favourite committee member (never worse under a
// monotone misrepresentation) and recomputes the total.
CcSolution finish(const Profile& p, const Misrepresentation& r, Objective objective,
                  std::vector<Alternative> representative) {
  std::vector<char> elected(p.alternatives(), 0);
  for (Alternative c : representative) elected[c] = 1;
  for (int v = 0; v < p.voters(); ++v) {
    for (Alternative c : p.order(v).ranking()) {
      if (elected[c]) {
        representative[v] = c;
        break;
      }
    }
  }
  std::vector<Alternative> committee = representative;
  std::sort(committee.begin(), committee.end());
  committee.erase(std::unique(committee.begin(), committee.end()), committee.end());
  const Rational phi = total_misrepresentation(p, r, objective, representative);
  return {{std::move(representative), std::move(committee)}, phi, objective};
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Misrepresentation Misrepresentation::positional(std::vector<Rational> s) {
  if (s.empty() || s.front() != Rational(0)) throw ProfileError("positional scores must start at 0");
  if (!std::is_sorted(s.begin(), s.end())) throw ProfileError("positional scores must be non-decreasing");
  Misrepresentation out;
  out.kind_ = Kind::positional;
  out.scores_ = std::move(s);
  return out;
}

Misrepresentation Misrepresentation::table(std::vector<std::vector<Rational>> values) {
  for (const auto& row : values) {
    for (const Rational& x : row) {
      if (x < Rational(0)) throw ProfileError("misrepresentation values must be non-negative");
    }
  }
  Misrepresentation out;
  out.kind_ = Kind::table;
  out.table_ = std::move(values);
  return out;
}

Misrepresentation Misrepresentation::approval(const std::vector<std::vector<Alternative>>& approved, int m) {
  std::vector<std::vector<Rational>> values;
  for (const auto& set : approved) {
    std::vector<Rational> row(m, Rational(1));
    for (Alternative c : set) {
      if (c < 0 || c >= m) throw ProfileError("approved alternative out of range");
      row[c] = 0;
    }
    values.push_back(std::move(row));
  }
  return table(std::move(values));
}

Rational Misrepresentation::operator()(const Profile& p, int voter, Alternative c) const {
  if (kind_ == Kind::positional) return scores_.at(p.order(voter).position(c) - 1);
  return table_.at(voter).at(c);
}

void Misrepresentation::validate(const Profile& p) const {
  const int m = p.alternatives();
  if (kind_ == Kind::positional) {
    if (static_cast<int>(scores_.size()) != m) throw ProfileError("positional vector length differs from m");
    return;
  }
  if (static_cast<int>(table_.size()) != p.voters()) throw ProfileError("table rows differ from voter count");
  for (int v = 0; v < p.voters(); ++v) {
    if (static_cast<int>(table_[v].size()) != m) throw ProfileError("table row " + std::to_string(v) + " has wrong width");
    const auto ranking = p.order(v).ranking();
    for (int i = 0; i + 1 < m; ++i) {
      if (table_[v][ranking[i]] > table_[v][ranking[i + 1]]) {
        throw ProfileError("misrepresentation of voter " + std::to_string(v) + " is not monotone in the ranking");
      }
    }
  }
}

Misrepresentation borda(int m) {
  if (m < 1) throw ProfileError("borda needs m >= 1");
  std::vector<Rational> s;
  for (int i = 0; i < m; ++i) s.emplace_back(i);
  return Misrepresentation::positional(std::move(s));
}

Rational total_misrepresentation(const Profile& p, const Misrepresentation& r, Objective objective,
                                 const std::vector<Alternative>& representative) {
  Rational total = 0;
  for (int v = 0; v < p.voters(); ++v) {
    const Rational value = r(p, v, representative.at(v));
    if (objective == Objective::utilitarian) {
      total += value * p.multiplicity(v);
    } else {
      total = std::max(total, value);
    }
  }
  return total;
}

CcSolution cc_tree_dp(const Profile& p, const Graph& tree, int k, const Misrepresentation& r, Objective objective) {
  const Instance in = prepare(p, tree, k, r, objective);
  const int n = tree.order();
  const int m = p.alternatives();
  const auto& alt = in.by_leaf_rank;

  // Root the tree at the leaf voter; `order` lists parents before children.
  std::vector<int> parent(n, -1);
  std::vector<int> order{in.leaf};
  std::vector<std::vector<int>> children(n);
  parent[in.leaf] = in.leaf;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : tree.neighbors(order[i])) {
      if (parent[y] < 0) {
        parent[y] = order[i];
        children[order[i]].push_back(y);
        order.push_back(y);
      }
    }
  }

  // open[v][j*k + t]: best cost of v's subtree when v's part is represented by
  // a_j and t other parts lie wholly inside the subtree.
  // closed[v][t]: best cost when v's part is finished too, t parts in total.
  struct Choice {
    int before = -1;  // t of the partial table before this child
    int child = -1;   // t handed to the child (open) or its part count (closed)
    bool joined = false;
  };
  std::vector<std::vector<Cost>> open(n);
  std::vector<std::vector<Cost>> closed(n, std::vector<Cost>(k + 1));
  std::vector<std::vector<int>> closed_arg(n, std::vector<int>(k + 1, -1));
  std::vector<std::vector<std::vector<Choice>>> choice(n);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Cost> cur(static_cast<std::size_t>(m) * k);
    for (int j = 0; j < m; ++j) cur[j * k] = in.voter_cost(v, alt[j]);
    for (Vertex u : children[v]) {
      std::vector<Cost> next(cur.size());
      std::vector<Choice> picked(cur.size());
      for (int j = 0; j < m; ++j) {
        for (int t1 = 0; t1 < k; ++t1) {
          const Cost& base = cur[j * k + t1];
          if (!base) continue;
          for (int t2 = 0; t1 + t2 < k; ++t2) {
            // u stays in v's part.
            if (Cost c = combine(base, open[u][j * k + t2], objective); better(c, next[j * k + t1 + t2])) {
              next[j * k + t1 + t2] = c;
              picked[j * k + t1 + t2] = {t1, t2, true};
            }
            // u's part is closed and holds t2 parts in total.
            if (t2 >= 1) {
              if (Cost c = combine(base, closed[u][t2], objective); better(c, next[j * k + t1 + t2])) {
                next[j * k + t1 + t2] = c;
                picked[j * k + t1 + t2] = {t1, t2, false};
              }
            }
          }
        }
      }
      cur = std::move(next);
      choice[v].push_back(std::move(picked));
    }
    for (int t = 1; t <= k; ++t) {
      for (int j = 0; j < m; ++j) {
        if (better(cur[j * k + t - 1], closed[v][t])) {
          closed[v][t] = cur[j * k + t - 1];
          closed_arg[v][t] = j;
        }
      }
    }
    open[v] = std::move(cur);
  }

  int best_t = -1;
  for (int t = 1; t <= k; ++t) {
    if (best_t < 0 || better(closed[in.leaf][t], closed[in.leaf][best_t])) best_t = t;
  }
  const Rational optimum = *closed[in.leaf][best_t];

  std::vector<Alternative> representative(n, -1);
  auto assign = [&](auto&& self, Vertex v, int j, int t) -> void {
    representative[v] = alt[j];
    for (std::size_t ci = children[v].size(); ci-- > 0;) {
      const Choice& c = choice[v][ci][j * k + t];
      const Vertex u = children[v][ci];
      if (c.joined) {
        self(self, u, j, c.child);
      } else {
        self(self, u, closed_arg[u][c.child], c.child - 1);
      }
      t = c.before;
    }
  };
  assign(assign, in.leaf, closed_arg[in.leaf][best_t], best_t - 1);

  CcSolution solution = finish(p, r, objective, std::move(representative));
  if (solution.phi != optimum) throw std::logic_error("tree DP reconstruction does not reach its optimum");
  return solution;
}

CcSolution cc_brute_force(const Profile& p, int k, const Misrepresentation& r, Objective objective) {
  const int m = p.alternatives();
  if (m > 20) throw ProfileError("brute force limited to 20 alternatives");
  if (k < 1 || k > m) throw ProfileError("committee size must lie in 1..m");
  r.validate(p);
  std::vector<char> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::optional<CcSolution> best;
  std::vector<Alternative> representative(p.voters());
  do {
    for (int v = 0; v < p.voters(); ++v) {
      for (Alternative c : p.order(v).ranking()) {
        if (pick[c]) {
          representative[v] = c;
          break;
        }
      }
    }
    const Rational phi = total_misrepresentation(p, r, objective, representative);
    if (!best || phi < best->phi) {
      std::vector<Alternative> committee;
      for (Alternative c = 0; c < m; ++c) {
        if (pick[c]) committee.push_back(c);
      }
      best = CcSolution{{representative, std::move(committee)}, phi, objective};
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return *best;
}

std::vector<VoterCut> enumerate_cuts_with_leaf(const Profile& p, const Graph& tree, int leaf) {
  if (p.voters() != tree.order()) throw ProfileError("voter count differs from tree size");
  if (leaf < 0 || leaf >= p.voters()) throw ProfileError("leaf out of range");
  const int m = p.alternatives();
  const LinearOrder& top = p.order(leaf);
  std::map<std::vector<int>, OrderedPair> seen;
  std::vector<VoterCut> cuts;
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (a == b || !top.prefers(a, b)) continue;
      std::vector<int> voters = v_ab(p, a, b);
      if (seen.emplace(voters, OrderedPair{a, b}).second) cuts.push_back({{a, b}, std::move(voters)});
    }
  }
  std::vector<int> everyone(p.voters());
  for (int v = 0; v < p.voters(); ++v) everyone[v] = v;
  if (!seen.contains(everyone)) cuts.push_back({{-1, -1}, std::move(everyone)});
  std::stable_sort(cuts.begin(), cuts.end(),
                   [](const VoterCut& x, const VoterCut& y) { return x.voters.size() < y.voters.size(); });
  return cuts;
}

CcSolution cc_cut_recurrence(const Profile& p, const Graph& tree, int k, const Misrepresentation& r,
                             Objective objective) {
  const Instance in = prepare(p, tree, k, r, objective);
  const int m = p.alternatives();
  const auto& alt = in.by_leaf_rank;
  const std::vector<VoterCut> cuts = enumerate_cuts_with_leaf(p, tree, in.leaf);
  const int sets = static_cast<int>(cuts.size());
  const int full = sets - 1;  // largest set is the whole electorate

  std::vector<std::vector<char>> member(sets, std::vector<char>(p.voters(), 0));
  for (int s = 0; s < sets; ++s) {
    for (int v : cuts[s].voters) member[s][v] = 1;
  }
  auto proper_subset = [&](int small, int big) {
    if (cuts[small].voters.size() >= cuts[big].voters.size()) return false;
    return std::includes(cuts[big].voters.begin(), cuts[big].voters.end(), cuts[small].voters.begin(),
                         cuts[small].voters.end());
  };
  // l over voters of s \ sub represented by c; sub == -1 is the empty set.
  auto block_cost = [&](int s, int sub, Alternative c) {
    Cost total = Rational(0);
    for (int v : cuts[s].voters) {
      if (sub < 0 || !member[sub][v]) total = combine(total, in.voter_cost(v, c), objective);
    }
    return total;
  };

  struct Entry {
    Cost value;
    int kind = 0;  // 0 prefix base, 1 single representative, 2 skip a_j, 3 split on a cut
    int arg = -1;  // chosen prefix index (kinds 1) or sub-cut (kind 3, -1 = empty)
  };
  // table[(s * (m + 1) + j) * (k + 1) + t], j and t 1-based.
  std::vector<Entry> table(static_cast<std::size_t>(sets) * (m + 1) * (k + 1));
  auto at = [&](int s, int j, int t) -> Entry& { return table[(static_cast<std::size_t>(s) * (m + 1) + j) * (k + 1) + t]; };

  for (int j = 1; j <= m; ++j) {
    for (int s = 0; s < sets; ++s) {
      for (int t = 1; t <= k; ++t) {
        Entry& e = at(s, j, t);
        if (t >= j) {
          // Every one of a_1..a_j may be elected: each voter takes the best.
          Cost total = Rational(0);
          for (int v : cuts[s].voters) {
            Cost best;
            for (int jj = 0; jj < j; ++jj) {
              if (Cost c = in.voter_cost(v, alt[jj]); better(c, best)) best = c;
            }
            total = combine(total, best, objective);
          }
          e = {total, 0, -1};
        } else if (t == 1) {
          for (int jj = 0; jj < j; ++jj) {
            if (Cost c = block_cost(s, -1, alt[jj]); better(c, e.value)) e = {c, 1, jj};
          }
        } else {
          e = {at(s, j - 1, t).value, 2, -1};
          for (int sub = -1; sub < sets; ++sub) {
            if (sub >= 0 && !proper_subset(sub, s)) continue;
            const Cost inner = sub < 0 ? Cost(Rational(0)) : at(sub, j - 1, t - 1).value;
            if (Cost c = combine(inner, block_cost(s, sub, alt[j - 1]), objective); better(c, e.value)) {
              e = {c, 3, sub};
            }
          }
        }
      }
    }
  }

  std::vector<Alternative> representative(p.voters(), -1);
  auto assign = [&](auto&& self, int s, int j, int t) -> void {
    const Entry& e = at(s, j, t);
    switch (e.kind) {
      case 0:
        for (int v : cuts[s].voters) {
          int best = 0;
          for (int jj = 1; jj < j; ++jj) {
            if (in.voter_cost(v, alt[jj]) < in.voter_cost(v, alt[best])) best = jj;
          }
          representative[v] = alt[best];
        }
        break;
      case 1:
        for (int v : cuts[s].voters) representative[v] = alt[e.arg];
        break;
      case 2:
        self(self, s, j - 1, t);
        break;
      default:
        for (int v : cuts[s].voters) {
          if (e.arg < 0 || !member[e.arg][v]) representative[v] = alt[j - 1];
        }
        if (e.arg >= 0) self(self, e.arg, j - 1, t - 1);
    }
  };
  assign(assign, full, m, k);
  return finish(p, r, objective, std::move(representative));
}

}  // namespace medianvote
