#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnmin/inequality_system.hpp"
#include "lnmin/mu_bar.hpp"
#include "lnmin/steepest_descent.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

struct WeightedEdge {
  int left = 0;        // vertex index in [0, n_left)
  int right = 0;       // vertex index in [n_left, n)
  long long weight = 0;
};

// Weighted bipartite graph with equal sides and at least one perfect
// matching; both are checked at construction, the latter with a Hall-set
// diagnostic naming a deficient vertex set. Dual variables live on the
// concatenated vertex set: s over the left side first, then t over the
// right side, as one integer vector of length n.
class MatchingInstance {
 public:
  MatchingInstance(int n_left, int n_right, std::vector<WeightedEdge> edges);

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int n() const { return n_left_ + n_right_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  long long max_abs_weight() const { return max_abs_weight_; }

  // Text round trip, line-oriented with '#' comments:
  //   n_left <count>
  //   n_right <count>
  //   edge <i> <j> <w>   (1-based; j offset by n_left, so the first right
  //                       vertex is n_left + 1)
  static MatchingInstance read(std::istream& in);
  void write(std::ostream& out) const;
  static MatchingInstance load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int n_left_;
  int n_right_;
  std::vector<WeightedEdge> edges_;
  long long max_abs_weight_ = 0;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right) in vertex indexing
};

long long matching_weight(const MatchingInstance& inst, const Matching& m);

// Objective sum(s) - sum(t) of the constrained dual: defined (finite) only
// where s_i - t_j >= w_ij holds on every edge.
std::optional<long long> dual_value(const MatchingInstance& inst, const IntVec& p);
bool dual_feasible(const MatchingInstance& inst, const IntVec& p);
bool dual_feasible(const MatchingInstance& inst, const RealVec& p, double tol = 1e-9);

struct HopcroftKarpResult {
  std::vector<int> match_left;   // partner as a local right index, or -1
  std::vector<int> match_right;  // partner as a left index, or -1
  int size = 0;
  // Vertices reachable from unmatched right vertices by paths alternating
  // non-matching and matching edges. This set realizes the deficiency bound:
  // |reachable lefts| - |reachable rights| = -(number of unmatched rights).
  std::vector<char> reachable_left;
  std::vector<char> reachable_right;
};

// Maximum-cardinality bipartite matching. `adjacency[l]` lists local right
// indices; sides may differ in size here (only instances force equality).
HopcroftKarpResult hopcroft_karp(int n_left, int n_right,
                                 const std::vector<std::vector<int>>& adjacency);

// Steepest-descent direction at a feasible dual point: the characteristic
// vector of the reachable set of the tight subgraph's maximum matching.
// Slope 0 means the tight subgraph has a perfect matching and p is optimal.
LocalDirection local_opt_matching(const MatchingInstance& inst, const IntVec& p);

// Largest feasible multiplier along direction d: the minimum slack over
// edges leaving the raised set (left outside, right inside).
long long matching_long_step(const MatchingInstance& inst, const IntVec& p, const IntVec& d);

// Bundles the dual into the solver-facing oracle. The instance must outlive
// the returned object.
LnConvexOracle matching_dual_oracle(const MatchingInstance& inst);

// s_i = max weight at i (0 for isolated lefts), t = 0; always feasible.
IntVec trivially_feasible_dual(const MatchingInstance& inst);

// The dual's feasible region as difference bounds t_j - s_i <= -w_ij.
InequalitySystem dom_system(const MatchingInstance& inst);

// Nearest feasible dual to an arbitrary real prediction.
Projection feasibility_projection(const MatchingInstance& inst, const RealVec& prediction);

// Perfect matching on the tight subgraph of an optimal dual; throws
// PreconditionError when none exists (the dual is not optimal).
Matching extract_primal(const MatchingInstance& inst, const IntVec& dual_opt);

// Difference bounds describing exactly the optimal duals: feasibility plus
// tightness on one maximum-weight matching. No box bounds appear; optimal
// duals are closed under all-ones shifts.
InequalitySystem argmin_system_matching(const MatchingInstance& inst, const Matching& m_star);

}  // namespace lnmin
