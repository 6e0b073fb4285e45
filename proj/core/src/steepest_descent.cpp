#include "lnmin/steepest_descent.hpp"

#include <algorithm>

#include "lnmin/errors.hpp"

namespace lnmin {

namespace {

constexpr int kMaxExhaustiveDim = 20;
constexpr int kIterationGuard = 1000000;

IntVec add_scaled(const IntVec& p, long long lambda, const IntVec& d) {
  IntVec out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k] + lambda * d[k];
  return out;
}

// Scans one sign family of the neighborhood. `sign` is +1 or -1; direction
// supports are subsets of indices, compared lexicographically as sorted
// sequences so the result is deterministic across platforms.
void scan_family(const LnConvexOracle& g, const IntVec& p, long long base, int sign,
                 long long& best_slope, std::vector<int>& best_support, int& best_sign) {
  const int n = g.dimension;
  std::vector<int> support;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    support.clear();
    IntVec q = p;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        support.push_back(i);
        q[i] += sign;
      }
    }
    const auto value = g.value(q);
    if (!value) continue;
    const long long slope = *value - base;
    if (slope < best_slope ||
        (slope == best_slope &&
         (best_sign == sign ? std::lexicographical_compare(support.begin(), support.end(),
                                                           best_support.begin(), best_support.end())
                            : false))) {
      best_slope = slope;
      best_support = support;
      best_sign = sign;
    }
  }
}

}  // namespace

LocalDirection exhaustive_local_direction(const LnConvexOracle& g, const IntVec& p) {
  if (g.dimension < 1 || g.dimension > kMaxExhaustiveDim)
    throw PreconditionError("exhaustive_local_direction: dimension out of range");
  if (static_cast<int>(p.size()) != g.dimension)
    throw PreconditionError("exhaustive_local_direction: point has wrong dimension");
  const auto base = g.value(p);
  if (!base) throw PreconditionError("exhaustive_local_direction: point outside the domain");

  long long best_slope = 0;  // the empty direction is always available
  std::vector<int> best_support;
  int best_sign = 1;
  scan_family(g, p, *base, +1, best_slope, best_support, best_sign);
  if (g.flavor == ConvexFlavor::kLNatural)
    scan_family(g, p, *base, -1, best_slope, best_support, best_sign);

  LocalDirection out;
  out.direction.assign(g.dimension, 0);
  for (int i : best_support) out.direction[i] = best_sign;
  out.slope = best_slope;
  return out;
}

long long long_step_length(const LnConvexOracle& g, const IntVec& p, const IntVec& d,
                           long long slope, long long ceiling) {
  if (slope >= 0) throw PreconditionError("long_step_length: needs a strict descent direction");
  if (ceiling < 1) throw PreconditionError("long_step_length: ceiling must be positive");
  const auto base = g.value(p);
  if (!base) throw PreconditionError("long_step_length: point outside the domain");

  auto additive = [&](long long lambda) {
    const auto v = g.value(add_scaled(p, lambda, d));
    return v && *v - *base == lambda * slope;
  };
  if (!additive(1)) throw InternalError("long_step_length: slope does not match a unit step");

  // Along a fixed neighborhood direction the per-step slopes are
  // non-decreasing, so additivity holds exactly on an interval [1, lambda*].
  long long lo = 1;
  while (lo < ceiling) {
    const long long probe = std::min(lo * 2, ceiling);
    if (!additive(probe)) break;
    lo = probe;
  }
  if (lo == ceiling) {
    if (additive(ceiling + 1))
      throw InfeasibleInputError("long_step_length: unbounded descent ray");
    return ceiling;
  }
  long long hi = std::min(lo * 2, ceiling);  // additive(lo), !additive(hi)
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (additive(mid) ? lo : hi) = mid;
  }
  return lo;
}

DescentResult steepest_descent(const LnConvexOracle& g, const IntVec& start,
                               const DescentOptions& options) {
  if (static_cast<int>(start.size()) != g.dimension)
    throw PreconditionError("steepest_descent: start has wrong dimension");
  if (!g.value) throw PreconditionError("steepest_descent: oracle has no value function");
  if (!g.value(start)) throw PreconditionError("steepest_descent: infeasible start");

  long long ceiling = 1LL << 30;
  if (options.step_ceiling)
    ceiling = *options.step_ceiling;
  else if (g.box_radius)
    ceiling = std::max<long long>(1, 2 * *g.box_radius * g.dimension);

  auto local = [&](const IntVec& p) {
    return g.local_direction ? g.local_direction(p) : exhaustive_local_direction(g, p);
  };

  DescentResult res;
  res.minimizer = start;
  for (;;) {
    if (res.trace.iterations >= kIterationGuard)
      throw InternalError("steepest_descent: iteration guard tripped");
    ++res.trace.iterations;
    LocalDirection dir = local(res.minimizer);
    if (dir.slope == 0) break;
    if (dir.slope > 0) throw InternalError("steepest_descent: local oracle returned positive slope");
    long long lambda = 1;
    if (options.long_step) {
      lambda = g.long_step ? g.long_step(res.minimizer, dir.direction, dir.slope)
                           : long_step_length(g, res.minimizer, dir.direction, dir.slope, ceiling);
    }
    res.trace.moves.push_back({res.minimizer, dir.direction, dir.slope, lambda});
    res.minimizer = add_scaled(res.minimizer, lambda, dir.direction);
  }
  return res;
}

}  // namespace lnmin
