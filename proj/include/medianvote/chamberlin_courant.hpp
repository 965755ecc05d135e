#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "medianvote/graph.hpp"
#include "medianvote/intermediate.hpp"
#include "medianvote/preference.hpp"

namespace medianvote {

using Rational = boost::rational<std::int64_t>;

enum class Objective { utilitarian, egalitarian };

std::string to_string(const Rational& r);  // "p/q"

/// Voter-by-candidate dissatisfaction, monotone in each voter's ranking.
class Misrepresentation {
 public:
  enum class Kind { positional, table };

  /// r(v,c) = s[pos_v(c) - 1]; requires 0 = s[0] <= s[1] <= ...
  static Misrepresentation positional(std::vector<Rational> s);
  /// Explicit voter x alternative table; must be non-negative.
  static Misrepresentation table(std::vector<std::vector<Rational>> values);
  /// 0 for approved candidates, 1 otherwise. `approved[v]` lists voter v's set.
  static Misrepresentation approval(const std::vector<std::vector<Alternative>>& approved, int m);

  Kind kind() const noexcept { return kind_; }
  Rational operator()(const Profile& p, int voter, Alternative c) const;

  /// Throws ProfileError unless shapes match p and every voter's values are
  /// monotone along that voter's ranking.
  void validate(const Profile& p) const;

 private:
  Kind kind_ = Kind::positional;
  std::vector<Rational> scores_;
  std::vector<std::vector<Rational>> table_;
};

/// Positional scores (0, 1, ..., m-1).
Misrepresentation borda(int m);

struct Assignment {
  std::vector<Alternative> representative;  // voter -> candidate
  std::vector<Alternative> committee;       // sorted image of `representative`
};

struct CcSolution {
  Assignment assignment;
  Rational phi;
  Objective objective = Objective::utilitarian;
};

/// Sum (weighted by multiplicity) or maximum of r(v, w(v)).
Rational total_misrepresentation(const Profile& p, const Misrepresentation& r, Objective objective,
                                 const std::vector<Alternative>& representative);

/// Optimal k-assignment for a profile single-crossing on `tree` (voter i on
/// vertex i). Rooted at the smallest leaf. Throws ProfileError if the
/// profile is not single-crossing on the tree or k is outside 1..m.
CcSolution cc_tree_dp(const Profile& p, const Graph& tree, int k, const Misrepresentation& r, Objective objective);

/// Exhaustive minimum over all k-subsets of candidates (m <= 20).
CcSolution cc_brute_force(const Profile& p, int k, const Misrepresentation& r, Objective objective);

// V_ab for a pair the leaf voter ranks a over b. `pair` is the first such
// pair in lexicographic order when several pairs give the same set.
struct VoterCut {
  OrderedPair pair;
  std::vector<int> voters;  // sorted, contains the leaf
};

/// Distinct sets V_ab containing `leaf` (plus the full voter set, tagged
/// with pair (-1,-1) when no pair produces it), ordered by size so that
/// every set comes after its proper subsets.
std::vector<VoterCut> enumerate_cuts_with_leaf(const Profile& p, const Graph& tree, int leaf);

/// Prefix recurrence over the nested cut sets of the leaf voter:
///   A[S,j,t] = min(A[S,j-1,t], min over cuts S' < S of l(A[S',j-1,t-1], r(S \ S', a_j)))
/// Exact for classical single-crossing profiles on a path. On branching
/// trees the optimum may need voter sets cut by several edges at once, so
/// the result is only an upper bound there; cc_tree_dp is exact.
CcSolution cc_cut_recurrence(const Profile& p, const Graph& tree, int k, const Misrepresentation& r,
                             Objective objective);

}  // namespace medianvote
