#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "medianvote/error.hpp"

namespace medianvote {

using Alternative = int;
using PairMask = boost::dynamic_bitset<std::uint64_t>;

/// A strict linear order over alternatives 0..m-1.
///
/// Stores both the ranking (best to worst) and its inverse, so `prefers` and
/// `position` are O(1).
class LinearOrder {
 public:
  /// Throws ProfileError unless `best_to_worst` is a permutation of 0..m-1.
  explicit LinearOrder(std::vector<Alternative> best_to_worst);
  static LinearOrder identity(int m);

  int size() const noexcept { return static_cast<int>(ranking_.size()); }
  std::span<const Alternative> ranking() const noexcept { return ranking_; }
  Alternative at(int index) const { return ranking_.at(index); }
  /// 1 for the top alternative.
  int position(Alternative a) const { return rank_.at(a) + 1; }
  bool prefers(Alternative a, Alternative b) const { return rank_[a] < rank_[b]; }

  /// Bit p(a,b) for a < b in lexicographic pair order: set iff a is preferred to b.
  PairMask pair_mask() const;

  auto operator<=>(const LinearOrder& other) const { return ranking_ <=> other.ranking_; }
  bool operator==(const LinearOrder& other) const { return ranking_ == other.ranking_; }

 private:
  std::vector<Alternative> ranking_;
  std::vector<int> rank_;
};

// Index of unordered pair {a,b}, a < b, in the lexicographic enumeration used
// by PairMask.
inline std::size_t pair_index(int m, Alternative a, Alternative b) {
  return static_cast<std::size_t>(a) * (2 * m - a - 1) / 2 + (b - a - 1);
}

/// Voters (one LinearOrder each) with positive integer multiplicities.
class Profile {
 public:
  Profile(int alternatives, std::vector<LinearOrder> orders, std::vector<std::int64_t> multiplicities = {});

  int alternatives() const noexcept { return m_; }
  int voters() const noexcept { return static_cast<int>(orders_.size()); }
  const LinearOrder& order(int voter) const { return orders_.at(voter); }
  const std::vector<LinearOrder>& orders() const noexcept { return orders_; }
  std::int64_t multiplicity(int voter) const { return multiplicities_.at(voter); }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return multiplicities_; }
  std::int64_t total_weight() const;
  bool is_reduced() const;

  /// Same profile with voters permuted: result voter i is this profile's voter source[i].
  Profile permuted(std::span<const int> source) const;
  Profile subprofile(std::span<const int> voters) const;

  bool operator==(const Profile&) const = default;

 private:
  int m_;
  std::vector<LinearOrder> orders_;
  std::vector<std::int64_t> multiplicities_;
};

struct MajorityRelation {
  int m = 0;
  std::vector<char> weak;    // weak[a*m+b]: a is weakly preferred to b
  std::vector<char> strict;  // strict[a*m+b]: weak(a,b) and not weak(b,a)

  bool weakly_prefers(Alternative a, Alternative b) const { return weak[a * m + b] != 0; }
  bool strictly_prefers(Alternative a, Alternative b) const { return strict[a * m + b] != 0; }
  bool operator==(const MajorityRelation&) const = default;
};

/// r_j between r_i and r_k: r_j agrees with every pair on which r_i and r_k agree.
bool is_order_between(const LinearOrder& ri, const LinearOrder& rj, const LinearOrder& rk);

/// Members of `domain` between p and q, in domain order.
std::vector<LinearOrder> interval(std::span<const LinearOrder> domain, const LinearOrder& p, const LinearOrder& q);

/// Voters preferring a to b (sorted ids).
std::vector<int> v_ab(const Profile& p, Alternative a, Alternative b);

MajorityRelation majority_relation(const Profile& p);
bool is_strict_transitive(const MajorityRelation& mr);

/// First voter whose order coincides with the strict majority relation.
std::optional<int> representative_voter(const Profile& p);

struct Reduction {
  Profile profile;                // distinct orders in first-appearance order
  std::vector<int> voter_class;   // original voter -> reduced voter
};
Reduction reduce(const Profile& p);

/// Distinct orders of the profile in first-appearance order.
std::vector<LinearOrder> domain_of(const Profile& p);

/// A triple (a,b,c) on which the domain restricts to a full Condorcet cycle.
std::optional<std::array<Alternative, 3>> find_cyclic_triple(std::span<const LinearOrder> domain);

/// Triple test: no triple restriction contains {abc,bca,cab} or {acb,cba,bac}.
bool is_condorcet_domain(std::span<const LinearOrder> domain);

/// Brute-force check of strict-majority transitivity over every multiplicity
/// vector with total 1..max_total (zero multiplicities allowed).
bool condorcet_oracle(std::span<const LinearOrder> domain, int max_total);

}  // namespace medianvote
