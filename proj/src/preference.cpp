#include "medianvote/preference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace medianvote {

LinearOrder::LinearOrder(std::vector<Alternative> best_to_worst)
    : ranking_(std::move(best_to_worst)), rank_(ranking_.size(), -1) {
  const int m = size();
  if (m < 1) throw ProfileError("linear order over no alternatives");
  for (int i = 0; i < m; ++i) {
    const Alternative a = ranking_[i];
    if (a < 0 || a >= m) throw ProfileError("alternative " + std::to_string(a) + " out of range");
    if (rank_[a] >= 0) throw ProfileError("alternative " + std::to_string(a) + " ranked twice");
    rank_[a] = i;
  }
}

LinearOrder LinearOrder::identity(int m) {
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  return LinearOrder(std::move(r));
}

PairMask LinearOrder::pair_mask() const {
  const int m = size();
  PairMask mask(static_cast<std::size_t>(m) * (m - 1) / 2);
  std::size_t k = 0;
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b, ++k) {
      if (rank_[a] < rank_[b]) mask.set(k);
    }
  }
  return mask;
}

Profile::Profile(int alternatives, std::vector<LinearOrder> orders, std::vector<std::int64_t> multiplicities)
    : m_(alternatives), orders_(std::move(orders)), multiplicities_(std::move(multiplicities)) {
  if (m_ < 1) throw ProfileError("profile needs at least one alternative");
  if (orders_.empty()) throw ProfileError("profile needs at least one voter");
  if (multiplicities_.empty()) multiplicities_.assign(orders_.size(), 1);
  if (multiplicities_.size() != orders_.size()) throw ProfileError("multiplicity count does not match voter count");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i].size() != m_) {
      throw ProfileError("voter " + std::to_string(i) + " ranks " + std::to_string(orders_[i].size()) +
                         " alternatives, expected " + std::to_string(m_));
    }
    if (multiplicities_[i] < 1) throw ProfileError("multiplicity of voter " + std::to_string(i) + " is not positive");
  }
}

std::int64_t Profile::total_weight() const {
  return std::accumulate(multiplicities_.begin(), multiplicities_.end(), std::int64_t{0});
}

bool Profile::is_reduced() const {
  std::vector<LinearOrder> sorted = orders_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Profile Profile::permuted(std::span<const int> source) const {
  if (source.size() != orders_.size()) throw ProfileError("permutation size mismatch");
  return subprofile(source);
}

Profile Profile::subprofile(std::span<const int> voters) const {
  std::vector<LinearOrder> orders;
  std::vector<std::int64_t> mult;
  for (int v : voters) {
    orders.push_back(orders_.at(v));
    mult.push_back(multiplicities_.at(v));
  }
  return Profile(m_, std::move(orders), std::move(mult));
}

bool is_order_between(const LinearOrder& ri, const LinearOrder& rj, const LinearOrder& rk) {
  const int m = ri.size();
  if (rj.size() != m || rk.size() != m) throw ProfileError("orders over different alternative sets");
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (a != b && ri.prefers(a, b) && rk.prefers(a, b) && !rj.prefers(a, b)) return false;
    }
  }
  return true;
}

std::vector<LinearOrder> interval(std::span<const LinearOrder> domain, const LinearOrder& p, const LinearOrder& q) {
  std::vector<LinearOrder> out;
  for (const LinearOrder& r : domain) {
    if (is_order_between(p, r, q)) out.push_back(r);
  }
  return out;
}

std::vector<int> v_ab(const Profile& p, Alternative a, Alternative b) {
  const int m = p.alternatives();
  if (a < 0 || a >= m || b < 0 || b >= m) throw ProfileError("alternative out of range");
  if (a == b) throw ProfileError("v_ab needs two distinct alternatives");
  std::vector<int> out;
  for (int i = 0; i < p.voters(); ++i) {
    if (p.order(i).prefers(a, b)) out.push_back(i);
  }
  return out;
}

MajorityRelation majority_relation(const Profile& p) {
  const int m = p.alternatives();
  std::vector<std::int64_t> wins(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < p.voters(); ++i) {
    const auto ranking = p.order(i).ranking();
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        wins[ranking[x] * m + ranking[y]] += p.multiplicity(i);
      }
    }
  }
  MajorityRelation mr{m, std::vector<char>(wins.size(), 0), std::vector<char>(wins.size(), 0)};
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (a != b) mr.weak[a * m + b] = wins[a * m + b] >= wins[b * m + a];
    }
  }
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      mr.strict[a * m + b] = mr.weak[a * m + b] && !mr.weak[b * m + a];
    }
  }
  return mr;
}

bool is_strict_transitive(const MajorityRelation& mr) {
  const int m = mr.m;
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = 0; b < m; ++b) {
      if (!mr.strictly_prefers(a, b)) continue;
      for (Alternative c = 0; c < m; ++c) {
        if (mr.strictly_prefers(b, c) && !mr.strictly_prefers(a, c)) return false;
      }
    }
  }
  return true;
}

std::optional<int> representative_voter(const Profile& p) {
  const MajorityRelation mr = majority_relation(p);
  const int m = p.alternatives();
  for (int i = 0; i < p.voters(); ++i) {
    bool matches = true;
    for (Alternative a = 0; a < m && matches; ++a) {
      for (Alternative b = 0; b < m && matches; ++b) {
        if (a != b) matches = mr.strictly_prefers(a, b) == p.order(i).prefers(a, b);
      }
    }
    if (matches) return i;
  }
  return std::nullopt;
}

Reduction reduce(const Profile& p) {
  std::map<LinearOrder, int> seen;
  std::vector<LinearOrder> orders;
  std::vector<std::int64_t> mult;
  std::vector<int> voter_class(p.voters());
  for (int i = 0; i < p.voters(); ++i) {
    auto [it, inserted] = seen.try_emplace(p.order(i), static_cast<int>(orders.size()));
    if (inserted) {
      orders.push_back(p.order(i));
      mult.push_back(0);
    }
    mult[it->second] += p.multiplicity(i);
    voter_class[i] = it->second;
  }
  return {Profile(p.alternatives(), std::move(orders), std::move(mult)), std::move(voter_class)};
}

std::vector<LinearOrder> domain_of(const Profile& p) { return reduce(p).profile.orders(); }

std::optional<std::array<Alternative, 3>> find_cyclic_triple(std::span<const LinearOrder> domain) {
  if (domain.empty()) return std::nullopt;
  const int m = domain.front().size();
  for (const LinearOrder& r : domain) {
    if (r.size() != m) throw ProfileError("orders over different alternative sets");
  }
  // Restriction of r to {a,b,c}, best first.
  auto code = [](const LinearOrder& r, Alternative a, Alternative b, Alternative c) {
    std::array<Alternative, 3> t{a, b, c};
    std::sort(t.begin(), t.end(), [&](Alternative x, Alternative y) { return r.prefers(x, y); });
    return std::array<Alternative, 3>{t[0], t[1], t[2]};
  };
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) {
      for (Alternative c = b + 1; c < m; ++c) {
        std::vector<std::array<Alternative, 3>> present;
        for (const LinearOrder& r : domain) present.push_back(code(r, a, b, c));
        auto has = [&](std::array<Alternative, 3> t) {
          return std::find(present.begin(), present.end(), t) != present.end();
        };
        const bool forward = has({a, b, c}) && has({b, c, a}) && has({c, a, b});
        const bool backward = has({a, c, b}) && has({c, b, a}) && has({b, a, c});
        if (forward || backward) return std::array<Alternative, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool is_condorcet_domain(std::span<const LinearOrder> domain) { return !find_cyclic_triple(domain).has_value(); }

bool condorcet_oracle(std::span<const LinearOrder> domain, int max_total) {
  if (domain.empty()) return true;
  const int m = domain.front().size();
  const int k = static_cast<int>(domain.size());
  // Pairwise preference of each order, precomputed once.
  std::vector<std::vector<char>> prefers(k, std::vector<char>(static_cast<std::size_t>(m) * m, 0));
  for (int i = 0; i < k; ++i) {
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) prefers[i][a * m + b] = a != b && domain[i].prefers(a, b);
    }
  }
  std::vector<int> counts(k, 0);
  MajorityRelation mr{m, std::vector<char>(static_cast<std::size_t>(m) * m), std::vector<char>(static_cast<std::size_t>(m) * m)};
  std::vector<int> wins(static_cast<std::size_t>(m) * m);

  auto check = [&]() {
    std::fill(wins.begin(), wins.end(), 0);
    for (int i = 0; i < k; ++i) {
      if (counts[i] == 0) continue;
      for (std::size_t x = 0; x < wins.size(); ++x) wins[x] += prefers[i][x] * counts[i];
    }
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) {
        mr.weak[a * m + b] = a != b && wins[a * m + b] >= wins[b * m + a];
      }
    }
    for (Alternative a = 0; a < m; ++a) {
      for (Alternative b = 0; b < m; ++b) mr.strict[a * m + b] = mr.weak[a * m + b] && !mr.weak[b * m + a];
    }
    return is_strict_transitive(mr);
  };

  // Depth-first over compositions with total <= max_total.
  auto recurse = [&](auto&& self, int index, int remaining, int total) -> bool {
    if (index == k) return total == 0 || check();
    for (int c = 0; c <= remaining; ++c) {
      counts[index] = c;
      if (!self(self, index + 1, remaining - c, total + c)) return false;
    }
    counts[index] = 0;
    return true;
  };
  return recurse(recurse, 0, max_total, 0);
}

}  // namespace medianvote
