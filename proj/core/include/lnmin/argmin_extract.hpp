#pragma once

#include <functional>
#include <optional>

#include "lnmin/inequality_system.hpp"
#include "lnmin/steepest_descent.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

// Value-query access to a discretely convex function whose minimizer set
// meets [-C, +C]^V. `feasible_start` must be a domain point inside
// [-2C, +2C]^V; the desk-scale restricted minimizer needs a seed, unlike the
// polynomial submodular machinery it stands in for.
struct BlackBoxOracle {
  int dimension = 0;
  ConvexFlavor flavor = ConvexFlavor::kLNatural;
  std::function<std::optional<long long>(const IntVec&)> value;
  long long box_radius = 0;  // C
  IntVec feasible_start;
};

struct BoundCandidate {
  enum class Kind { kLower, kUpper, kDifference };
  Kind kind = Kind::kLower;
  int i = 0;
  int j = 0;           // used by kDifference only
  long long bound = 0; // p_i >= bound, p_i <= bound, or p_j - p_i <= bound
};

struct ExtractStats {
  long long validity_checks = 0;
  long long descent_runs = 0;
};

// True iff every minimizer of g over [-2C, +2C]^V satisfies the candidate,
// decided by one restricted minimization: the bound is valid exactly when
// forcing its reversal (shifted by one) pushes the minimum strictly up.
bool constraint_is_valid(const BlackBoxOracle& g, const BoundCandidate& candidate);

// Recovers the tightest box and difference bounds of the minimizer set
// within [-2C, +2C]^V by binary search over candidate bounds, each probe
// answered by a restricted minimization. Box bounds are searched over
// [-2C, +2C], difference bounds over [-4C, +4C]; every recovered bound is
// finite because the search box truncates the set. Gated to dimension <= 16;
// local optimizations enumerate the whole neighborhood.
InequalitySystem extract_argmin_system(const BlackBoxOracle& g, ExtractStats* stats = nullptr);

}  // namespace lnmin
