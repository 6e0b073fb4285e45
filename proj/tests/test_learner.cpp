#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lnmin/errors.hpp"
#include "lnmin/learner.hpp"
#include "lnmin/rng.hpp"
#include "test_fixtures.hpp"

using namespace lnmin;

TEST_CASE("learner construction is validated") {
  CHECK_THROWS_AS(LearnerState::fixed_rate(0, 1.0, 0.5), PreconditionError);
  CHECK_THROWS_AS(LearnerState::fixed_rate(2, 0.0, 0.5), PreconditionError);
  CHECK_THROWS_AS(LearnerState::fixed_rate(2, 1.0, -0.5), PreconditionError);
  CHECK_THROWS_AS(LearnerState::adaptive(2, 1.0, 0.0), PreconditionError);
}

TEST_CASE("fixed-rate steps move against the gradient and clamp at the box") {
  LearnerState s = LearnerState::fixed_rate(2, 1.0, 0.25);
  s.ogd_step({1.0, -1.0});
  CHECK(s.iterate()[0] == doctest::Approx(-0.25));
  CHECK(s.iterate()[1] == doctest::Approx(0.25));
  CHECK(s.completed_rounds() == 1);
  CHECK(s.grad_sq_sum() == doctest::Approx(2.0));

  LearnerState c = LearnerState::fixed_rate(1, 1.0, 1.0);
  c.ogd_step({-0.5});
  CHECK(c.iterate()[0] == doctest::Approx(0.5));
  c.ogd_step({-1.0});
  CHECK(c.iterate()[0] == doctest::Approx(1.0));  // clamped, not 1.5

  LearnerState z = LearnerState::fixed_rate(2, 1.0, 0.5);
  z.ogd_step({0.0, 0.0});
  CHECK(z.iterate()[0] == 0.0);
  CHECK(z.completed_rounds() == 1);

  CHECK_THROWS_AS(z.ogd_step({1.0}), PreconditionError);
  CHECK_THROWS_AS(z.ogd_step({1.0, std::nan("")}), PreconditionError);
}

TEST_CASE("adaptive rate follows the accumulated gradient energy") {
  LearnerState s = LearnerState::adaptive(2, 1.0, 1.0);
  CHECK_THROWS_AS(s.adaptive_rate(), PreconditionError);  // nothing observed yet

  s.ogd_step({1.0, 1.0});
  CHECK(s.grad_sq_sum() == doctest::Approx(2.0));
  CHECK(s.adaptive_rate() == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.iterate()[0] == doctest::Approx(-1.0));  // sqrt(2) step, clamped

  LearnerState small = LearnerState::adaptive(2, 1.0, 0.1);
  small.ogd_step({1.0, 1.0});
  CHECK(small.adaptive_rate() == doctest::Approx(0.1 * std::sqrt(2.0)));
  CHECK(small.iterate()[0] == doctest::Approx(-0.1 * std::sqrt(2.0)));

  LearnerState still = LearnerState::adaptive(2, 1.0, 1.0);
  still.ogd_step({0.0, 0.0});
  CHECK(still.iterate() == RealVec{0.0, 0.0});
  CHECK(still.completed_rounds() == 1);  // the round still counts
  CHECK_THROWS_AS(still.adaptive_rate(), PreconditionError);

  LearnerState fixed = LearnerState::fixed_rate(2, 1.0, 0.5);
  fixed.ogd_step({1.0, 0.0});
  CHECK_THROWS_AS(fixed.adaptive_rate(), PreconditionError);
}

TEST_CASE("anytime prediction averages the played iterates") {
  LearnerState s = LearnerState::fixed_rate(1, 10.0, 1.0);
  CHECK(s.anytime_prediction() == RealVec{0.0});  // round 1 plays the iterate itself

  s.ogd_step({-2.0});
  CHECK(s.iterate()[0] == doctest::Approx(2.0));
  CHECK(s.anytime_prediction()[0] == doctest::Approx(1.0));  // (0 + 2) / 2

  s.ogd_step({-2.0});
  CHECK(s.iterate()[0] == doctest::Approx(4.0));
  CHECK(s.anytime_prediction()[0] == doctest::Approx(2.0));  // (0 + 2 + 4) / 3
}

TEST_CASE("iterates never leave the box") {
  Rng rng(51);
  LearnerState s = LearnerState::adaptive(3, 2.0, 5.0);
  for (int t = 0; t < 200; ++t) {
    RealVec z(3);
    for (double& x : z) x = static_cast<double>(rng.uniform_int(-100, 100)) / 25.0;
    s.ogd_step(z);
    for (double x : s.iterate()) CHECK(std::abs(x) <= 2.0 + 1e-12);
    for (double x : s.anytime_prediction()) CHECK(std::abs(x) <= 2.0 + 1e-12);
  }
  CHECK(s.completed_rounds() == 200);
}

TEST_CASE("pointwise loss examples") {
  const LossEval l1 = l1_loss({0.0, 0.0}, {1.0, -1.0});
  CHECK(l1.value == doctest::Approx(2.0));
  CHECK(l1.subgradient == RealVec{1.0, -1.0});

  const LossEval li = linf_loss({0.0, 0.0}, {1.0, -1.0});
  CHECK(li.value == doctest::Approx(1.0));
  CHECK(li.subgradient == RealVec{1.0, 0.0});  // ties break to the lowest index

  const LossEval flat = linf_loss({0.5, -0.5}, {0.5, -0.5});
  CHECK(flat.value == 0.0);
  CHECK(flat.subgradient == RealVec{0.0, 0.0});

  const LossEval mu = mu_bar_loss(fixtures::fig2_system(), {0.0, 0.0}, {2.0, -2.0});
  CHECK(mu.value == doctest::Approx(2.0));
  CHECK(mu.subgradient == RealVec{1.0, -1.0});

  CHECK_THROWS_AS(l1_loss({0.0}, {1.0, 2.0}), PreconditionError);
  CHECK_THROWS_AS(linf_loss({0.0}, {1.0, 2.0}), PreconditionError);
}

TEST_CASE("every loss lies above its tangent plane") {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 4));
    const auto planted = fixtures::random_system(rng, n);
    RealVec target(static_cast<size_t>(n)), point(static_cast<size_t>(n)),
        probe(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      target[static_cast<size_t>(v)] = static_cast<double>(rng.uniform_int(-40, 40)) / 8.0;
      point[static_cast<size_t>(v)] = static_cast<double>(rng.uniform_int(-40, 40)) / 8.0;
      probe[static_cast<size_t>(v)] = static_cast<double>(rng.uniform_int(-40, 40)) / 8.0;
    }
    const RealVec witness = to_real(planted.witness);

    const auto check_tangent = [&](const LossEval& at_point, double at_probe) {
      double inner = 0;
      for (size_t v = 0; v < point.size(); ++v)
        inner += at_point.subgradient[v] * (probe[v] - point[v]);
      CHECK(at_probe >= at_point.value + inner - 1e-9);
    };
    check_tangent(l1_loss(target, point), l1_loss(target, probe).value);
    check_tangent(linf_loss(target, point), linf_loss(target, probe).value);
    check_tangent(mu_bar_loss(planted.system, witness, point),
                  mu_bar_loss(planted.system, witness, probe).value);
  }
}

TEST_CASE("regret is the summed loss gap") {
  CHECK(regret({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == doctest::Approx(0.0));
  CHECK(regret({2.0, 2.0}, {1.0, 0.5}) == doctest::Approx(2.5));
  CHECK_THROWS_AS(regret({1.0}, {1.0, 2.0}), PreconditionError);
}

TEST_CASE("box-constrained comparator search is sane") {
  const auto quad = [](const RealVec& x) { return (x[0] - 0.3) * (x[0] - 0.3); };
  const RealVec argq = approx_box_minimizer(quad, {0.9}, 1.0);
  CHECK(argq[0] == doctest::Approx(0.3).epsilon(1e-4));

  const auto outside = [](const RealVec& x) { return std::abs(x[0] - 7.0); };
  const RealVec arg_edge = approx_box_minimizer(outside, {0.0}, 1.0);
  CHECK(arg_edge[0] == doctest::Approx(1.0).epsilon(1e-4));

  const auto vee2 = [](const RealVec& x) {
    return std::abs(x[0] + 0.5) + 2.0 * std::abs(x[1] - 0.25);
  };
  const RealVec arg2 = approx_box_minimizer(vee2, {0.0, 0.0}, 1.0);
  CHECK(arg2[0] == doctest::Approx(-0.5).epsilon(1e-4));
  CHECK(arg2[1] == doctest::Approx(0.25).epsilon(1e-4));

  CHECK_THROWS_AS(approx_box_minimizer(quad, {}, 1.0), PreconditionError);
  CHECK_THROWS_AS(approx_box_minimizer(quad, {0.0}, 0.0), PreconditionError);
}
