#pragma once

#include <optional>
#include <vector>

#include "lnmin/inequality_system.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/mu_bar.hpp"
#include "lnmin/steepest_descent.hpp"
#include "lnmin/vectors.hpp"

namespace lnmin {

// Exhaustive reference implementations. Each carries a hard size gate and
// exists to cross-check the fast paths, never to run at scale.

struct BruteForceMatching {
  Matching matching;
  long long weight = 0;
};

// Enumerates all assignments of rights to lefts. Gate: n_left <= 10.
BruteForceMatching brute_force_matching(const MatchingInstance& inst);

// Minimum linf_pm_norm distance from `point` to an integral system member
// inside the per-coordinate +/- radius box, or nullopt when the box holds no
// member. Gate: dimension <= 6, radius <= 8.
std::optional<long long> brute_force_mu(const InequalitySystem& system, const IntVec& point,
                                        int radius);

struct EnumeratedPaths {
  double min_weight = 0;
  std::vector<PathWitness> shortest;  // all paths within 1e-9 of the minimum
};

// Enumerates every simple origin-destination path. Gate: <= 8 vertices.
EnumeratedPaths brute_force_paths(const AuxiliaryGraph& graph);

// Exhaustive neighborhood scan with the solver's tie rule. Gate: dim <= 12.
LocalDirection brute_force_local_direction(const LnConvexOracle& g, const IntVec& p);

}  // namespace lnmin
