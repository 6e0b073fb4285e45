#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lnmin/vectors.hpp"

namespace lnmin {

// Which discrete-convexity class the function belongs to. kL functions are
// invariant under all-ones shifts and descend with {0,+1} directions only;
// kLNatural functions also use the {0,-1} family.
enum class ConvexFlavor { kL, kLNatural };

struct LocalDirection {
  IntVec direction;    // a 0/+1 vector, or 0/-1 for the second kLNatural family
  long long slope = 0; // g(p + direction) - g(p); never positive at a local optimum
};

// Value and local-optimization access to a discretely convex function.
// `value` returns nullopt outside the effective domain and exact integers
// inside it. When `local_direction` is empty the solver enumerates the whole
// neighborhood, which is exponential in the dimension and intended for
// desk-scale functions only. `long_step`, when present, gives the largest
// multiplier along a descent direction in closed form; otherwise the solver
// probes value queries. `box_radius` informs the default step ceiling.
struct LnConvexOracle {
  int dimension = 0;
  ConvexFlavor flavor = ConvexFlavor::kLNatural;
  std::function<std::optional<long long>(const IntVec&)> value;
  std::function<LocalDirection(const IntVec&)> local_direction;
  std::function<long long(const IntVec& p, const IntVec& d, long long slope)> long_step;
  std::optional<long long> box_radius;
};

struct DescentStep {
  IntVec point;  // iterate before the move
  IntVec direction;
  long long slope = 0;
  long long step_length = 0;
};

struct DescentTrace {
  std::vector<DescentStep> moves;  // every recorded slope is strictly negative
  int iterations = 0;              // local optimizations run, terminal check included
};

struct DescentOptions {
  bool long_step = true;
  std::optional<long long> step_ceiling;  // default 2 * box_radius * dimension
};

struct DescentResult {
  IntVec minimizer;
  DescentTrace trace;
};

// Greedy steepest descent: repeatedly take a slope-minimizing neighborhood
// direction and walk as far along it as the slope stays additive. Starting
// from a domain point, the result is a global minimizer whose distance from
// the start (under linf_pm_norm) is the least possible over all minimizers,
// reached within that distance plus one local optimizations.
DescentResult steepest_descent(const LnConvexOracle& g, const IntVec& start,
                               const DescentOptions& options = {});

// Largest lambda with g(p + lambda d) - g(p) == lambda * slope, found by
// doubling then bisecting on value queries. Throws InfeasibleInputError when
// additivity still holds past `ceiling` (an unbounded descent ray).
long long long_step_length(const LnConvexOracle& g, const IntVec& p, const IntVec& d,
                           long long slope, long long ceiling);

// Exhaustive neighborhood minimization with a deterministic tie rule:
// smallest slope first, then the lexicographically smallest support as a
// sorted index sequence, trying the {0,+1} family before {0,-1}.
LocalDirection exhaustive_local_direction(const LnConvexOracle& g, const IntVec& p);

}  // namespace lnmin
