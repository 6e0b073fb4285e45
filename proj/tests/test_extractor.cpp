#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <optional>

#include "lnmin/argmin_extract.hpp"
#include "lnmin/errors.hpp"
#include "lnmin/matching.hpp"
#include "lnmin/oracle.hpp"
#include "lnmin/rng.hpp"
#include "test_fixtures.hpp"

using namespace lnmin;

namespace {

// Separable distance to the product of [lo_i, hi_i]: minimizer set is the box.
BlackBoxOracle interval_oracle(const IntVec& lo, const IntVec& hi, long long radius) {
  BlackBoxOracle g;
  g.dimension = static_cast<int>(lo.size());
  g.box_radius = radius;
  g.feasible_start.assign(lo.size(), 0);
  g.value = [lo, hi](const IntVec& p) -> std::optional<long long> {
    long long total = 0;
    for (size_t k = 0; k < p.size(); ++k) {
      if (p[k] < lo[k]) total += lo[k] - p[k];
      if (p[k] > hi[k]) total += p[k] - hi[k];
    }
    return total;
  };
  return g;
}

BlackBoxOracle dual_box_oracle(const MatchingInstance& inst, long long radius) {
  BlackBoxOracle g;
  g.dimension = inst.n();
  g.box_radius = radius;
  g.feasible_start = trivially_feasible_dual(inst);
  g.value = [&inst](const IntVec& p) { return dual_value(inst, p); };
  return g;
}

// Walks the whole search box and compares membership point by point.
void check_same_members(const InequalitySystem& a, const InequalitySystem& b,
                        long long radius) {
  const int n = a.dim();
  REQUIRE(b.dim() == n);
  IntVec p(static_cast<size_t>(n), -radius);
  while (true) {
    CHECK(a.contains(p) == b.contains(p));
    int k = 0;
    for (; k < n; ++k) {
      if (++p[static_cast<size_t>(k)] <= radius) break;
      p[static_cast<size_t>(k)] = -radius;
    }
    if (k == n) break;
  }
}

}  // namespace

TEST_CASE("point oracles recover the singleton exactly") {
  const IntVec a{1, -2};
  BlackBoxOracle g = interval_oracle(a, a, 3);
  ExtractStats stats;
  const InequalitySystem sys = extract_argmin_system(g, &stats);

  CHECK(sys.alpha(0) == 1);
  CHECK(sys.beta(0) == 1);
  CHECK(sys.alpha(1) == -2);
  CHECK(sys.beta(1) == -2);
  CHECK(sys.gamma(0, 1) == -3);  // p_1 - p_0 at the one member
  CHECK(sys.gamma(1, 0) == 3);
  CHECK(stats.validity_checks > 0);
  CHECK(stats.descent_runs == stats.validity_checks);
  // 6 binary searches over spans 13, 13, and 25
  CHECK(stats.validity_checks <= 40);
}

TEST_CASE("interval oracles recover the product box as a point set") {
  const BlackBoxOracle g = interval_oracle({-1, 0}, {1, 0}, 2);
  const InequalitySystem sys = extract_argmin_system(g);

  CHECK(sys.alpha(0) == -1);
  CHECK(sys.beta(0) == 1);
  CHECK(sys.alpha(1) == 0);
  CHECK(sys.beta(1) == 0);
  // difference bounds come out as the box-implied extremes
  CHECK(sys.gamma(0, 1) == 1);   // p_1 - p_0 <= hi_1 - lo_0
  CHECK(sys.gamma(1, 0) == 1);

  InequalitySystem expect(2);
  expect.set_alpha(0, -1);
  expect.set_beta(0, 1);
  expect.set_alpha(1, 0);
  expect.set_beta(1, 0);
  check_same_members(sys, expect, 4);
}

TEST_CASE("recovered bounds are tight under unit perturbation") {
  const BlackBoxOracle g = interval_oracle({-1, 0}, {1, 0}, 2);
  const InequalitySystem sys = extract_argmin_system(g);

  for (int i = 0; i < 2; ++i) {
    CHECK(constraint_is_valid(g, {BoundCandidate::Kind::kLower, i, 0, *sys.alpha(i)}));
    CHECK_FALSE(constraint_is_valid(g, {BoundCandidate::Kind::kLower, i, 0, *sys.alpha(i) + 1}));
    CHECK(constraint_is_valid(g, {BoundCandidate::Kind::kUpper, i, 0, *sys.beta(i)}));
    CHECK_FALSE(constraint_is_valid(g, {BoundCandidate::Kind::kUpper, i, 0, *sys.beta(i) - 1}));
  }
  CHECK(constraint_is_valid(g, {BoundCandidate::Kind::kDifference, 0, 1, *sys.gamma(0, 1)}));
  CHECK_FALSE(
      constraint_is_valid(g, {BoundCandidate::Kind::kDifference, 0, 1, *sys.gamma(0, 1) - 1}));
}

TEST_CASE("single validity queries on the assignment dual") {
  const auto inst = fixtures::two_by_two();
  const BlackBoxOracle g = dual_box_oracle(inst, 4);
  // optimal duals pin s_0 - t_2 to exactly 2
  CHECK(constraint_is_valid(g, {BoundCandidate::Kind::kDifference, 2, 0, 2}));
  CHECK_FALSE(constraint_is_valid(g, {BoundCandidate::Kind::kDifference, 2, 0, 1}));

  CHECK_THROWS_AS(constraint_is_valid(g, {BoundCandidate::Kind::kLower, 0, 0, -9}),
                  PreconditionError);
  CHECK_THROWS_AS(constraint_is_valid(g, {BoundCandidate::Kind::kLower, 4, 0, 0}),
                  PreconditionError);
  CHECK_THROWS_AS(constraint_is_valid(g, {BoundCandidate::Kind::kDifference, 1, 1, 0}),
                  PreconditionError);
}

TEST_CASE("value queries alone recover the optimal-dual description") {
  const auto inst = fixtures::two_by_two();
  const BlackBoxOracle g = dual_box_oracle(inst, 4);
  const InequalitySystem from_values = extract_argmin_system(g);

  const Matching m_star = extract_primal(inst, {2, 2, 0, 0});
  const InequalitySystem from_structure = argmin_system_matching(inst, m_star);

  // same integral points across the whole search box, bound by bound or not
  check_same_members(from_values, from_structure, 8);
}

TEST_CASE("value-query extraction matches the structural description on random duals") {
  Rng rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const auto inst = fixtures::random_instance(rng, 2, 1);
    const long long radius = inst.n() * std::max<long long>(1, inst.max_abs_weight());
    const BlackBoxOracle g = dual_box_oracle(inst, radius);
    const InequalitySystem from_values = extract_argmin_system(g);

    const BruteForceMatching best = brute_force_matching(inst);
    const InequalitySystem from_structure = argmin_system_matching(inst, best.matching);
    check_same_members(from_values, from_structure, 2 * radius);
  }
}

TEST_CASE("extraction is deterministic") {
  const BlackBoxOracle g = interval_oracle({-1, 1}, {0, 2}, 3);
  const InequalitySystem a = extract_argmin_system(g);
  const InequalitySystem b = extract_argmin_system(g);
  CHECK(a.finite_bound_count() == b.finite_bound_count());
  for (int i = 0; i < 2; ++i) {
    CHECK(a.alpha(i) == b.alpha(i));
    CHECK(a.beta(i) == b.beta(i));
  }
  CHECK(a.gamma(0, 1) == b.gamma(0, 1));
  CHECK(a.gamma(1, 0) == b.gamma(1, 0));
}

TEST_CASE("oracle gates reject out-of-contract inputs") {
  BlackBoxOracle g = interval_oracle({0}, {0}, 2);

  BlackBoxOracle wide = g;
  wide.dimension = 17;
  wide.feasible_start.assign(17, 0);
  CHECK_THROWS_AS(extract_argmin_system(wide), PreconditionError);

  BlackBoxOracle flat = g;
  flat.box_radius = 0;
  CHECK_THROWS_AS(extract_argmin_system(flat), PreconditionError);

  BlackBoxOracle hollow = g;
  hollow.value = nullptr;
  CHECK_THROWS_AS(extract_argmin_system(hollow), PreconditionError);

  BlackBoxOracle misfit = g;
  misfit.feasible_start = {0, 0};
  CHECK_THROWS_AS(extract_argmin_system(misfit), PreconditionError);

  BlackBoxOracle outside = g;
  outside.feasible_start = {9};
  CHECK_THROWS_AS(extract_argmin_system(outside), PreconditionError);

  BlackBoxOracle stranded = g;
  stranded.value = [](const IntVec&) -> std::optional<long long> { return std::nullopt; };
  CHECK_THROWS_AS(extract_argmin_system(stranded), PreconditionError);
}
