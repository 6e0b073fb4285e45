#include "lnmin/argmin_extract.hpp"

#include <algorithm>

#include "lnmin/errors.hpp"

namespace lnmin {

namespace {

struct BoxMinimum {
  IntVec point;
  long long value = 0;
};

bool inside_box(const IntVec& p, long long radius) {
  for (long long x : p)
    if (x < -radius || x > radius) return false;
  return true;
}

void check_oracle(const BlackBoxOracle& g) {
  if (g.dimension < 1 || g.dimension > 16)
    throw PreconditionError("extract_argmin_system: gated to dimension <= 16");
  if (g.box_radius < 1) throw PreconditionError("extract_argmin_system: box radius must be positive");
  if (!g.value) throw PreconditionError("extract_argmin_system: oracle has no value function");
  if (static_cast<int>(g.feasible_start.size()) != g.dimension)
    throw PreconditionError("extract_argmin_system: feasible start has wrong dimension");
  if (!inside_box(g.feasible_start, 2 * g.box_radius))
    throw PreconditionError("extract_argmin_system: feasible start outside the search box");
  if (!g.value(g.feasible_start))
    throw PreconditionError("extract_argmin_system: feasible start outside the domain");
}

// Minimizes g over the search box [-2C, +2C]^V via steepest descent from the
// seed. Restricting to the box keeps discrete convexity (box indicators are
// separable) and makes every descent ray bounded.
BoxMinimum boxed_minimum(const BlackBoxOracle& g) {
  const long long r = 2 * g.box_radius;
  LnConvexOracle boxed;
  boxed.dimension = g.dimension;
  boxed.flavor = ConvexFlavor::kLNatural;
  boxed.box_radius = r;
  boxed.value = [&g, r](const IntVec& p) -> std::optional<long long> {
    if (!inside_box(p, r)) return std::nullopt;
    return g.value(p);
  };
  const DescentResult res = steepest_descent(boxed, g.feasible_start);
  return {res.minimizer, *g.value(res.minimizer)};
}

// Decides whether some boxed minimizer of g lies in the test region by
// minimizing g plus a unit violation penalty for that region. The penalty is
// a convex function of one coordinate or one difference, so discrete
// convexity survives, and the seed stays feasible because the penalty is
// finite everywhere in the box. Since g is integer-valued, the penalized
// minimum equals the unrestricted one exactly when a minimizer satisfies the
// region: any other point pays at least +1 in value or +1 in penalty.
bool region_holds_minimizer(const BlackBoxOracle& g, const BoundCandidate& candidate,
                            const BoxMinimum& base, ExtractStats* stats) {
  const long long r = 2 * g.box_radius;
  LnConvexOracle penalized;
  penalized.dimension = g.dimension;
  penalized.flavor = ConvexFlavor::kLNatural;
  penalized.box_radius = r;
  penalized.value = [&g, &candidate, r](const IntVec& p) -> std::optional<long long> {
    if (!inside_box(p, r)) return std::nullopt;
    const auto v = g.value(p);
    if (!v) return std::nullopt;
    long long violation = 0;
    switch (candidate.kind) {
      case BoundCandidate::Kind::kLower:  // test region: p_i <= bound - 1
        violation = std::max(0LL, p[candidate.i] - (candidate.bound - 1));
        break;
      case BoundCandidate::Kind::kUpper:  // test region: p_i >= bound + 1
        violation = std::max(0LL, (candidate.bound + 1) - p[candidate.i]);
        break;
      case BoundCandidate::Kind::kDifference:  // test region: p_j - p_i >= bound + 1
        violation = std::max(0LL, (candidate.bound + 1) - (p[candidate.j] - p[candidate.i]));
        break;
    }
    return *v + violation;
  };
  if (stats) ++stats->descent_runs;
  const DescentResult res = steepest_descent(penalized, base.point);
  return *penalized.value(res.minimizer) == base.value;
}

bool candidate_valid(const BlackBoxOracle& g, const BoundCandidate& candidate,
                     const BoxMinimum& base, ExtractStats* stats) {
  if (stats) ++stats->validity_checks;
  return !region_holds_minimizer(g, candidate, base, stats);
}

void check_candidate_range(const BlackBoxOracle& g, const BoundCandidate& candidate) {
  const long long box = 2 * g.box_radius;
  const long long span = candidate.kind == BoundCandidate::Kind::kDifference ? 2 * box : box;
  if (candidate.bound < -span || candidate.bound > span)
    throw PreconditionError("constraint_is_valid: candidate bound outside the search range");
  if (candidate.i < 0 || candidate.i >= g.dimension)
    throw PreconditionError("constraint_is_valid: index out of range");
  if (candidate.kind == BoundCandidate::Kind::kDifference &&
      (candidate.j < 0 || candidate.j >= g.dimension || candidate.j == candidate.i))
    throw PreconditionError("constraint_is_valid: bad difference indices");
}

}  // namespace

bool constraint_is_valid(const BlackBoxOracle& g, const BoundCandidate& candidate) {
  check_oracle(g);
  check_candidate_range(g, candidate);
  const BoxMinimum base = boxed_minimum(g);
  return candidate_valid(g, candidate, base, nullptr);
}

InequalitySystem extract_argmin_system(const BlackBoxOracle& g, ExtractStats* stats) {
  check_oracle(g);
  const BoxMinimum base = boxed_minimum(g);
  const long long box = 2 * g.box_radius;
  InequalitySystem sys(g.dimension);

  // Validity of "p_i >= a" is monotone downward in a, of "p_i <= b" and
  // "p_j - p_i <= c" monotone upward, so each tightest bound is one binary
  // search whose extreme end is always valid (the set lives in the box).
  auto largest_valid = [&](auto&& make) {
    long long lo = -box, hi = box;  // make(lo) is valid
    while (lo < hi) {
      const long long mid = lo + (hi - lo + 1) / 2;
      if (candidate_valid(g, make(mid), base, stats))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  };
  auto smallest_valid = [&](long long from, long long to, auto&& make) {
    long long lo = from, hi = to;  // make(hi) is valid
    while (lo < hi) {
      const long long mid = lo + (hi - lo) / 2;
      if (candidate_valid(g, make(mid), base, stats))
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  };

  for (int i = 0; i < g.dimension; ++i) {
    sys.set_alpha(i, largest_valid([i](long long b) {
      return BoundCandidate{BoundCandidate::Kind::kLower, i, 0, b};
    }));
    sys.set_beta(i, smallest_valid(-box, box, [i](long long b) {
      return BoundCandidate{BoundCandidate::Kind::kUpper, i, 0, b};
    }));
  }
  for (int i = 0; i < g.dimension; ++i)
    for (int j = 0; j < g.dimension; ++j) {
      if (i == j) continue;
      sys.add_gamma(i, j, smallest_valid(-2 * box, 2 * box, [i, j](long long b) {
        return BoundCandidate{BoundCandidate::Kind::kDifference, i, j, b};
      }));
    }
  return sys;
}

}  // namespace lnmin
