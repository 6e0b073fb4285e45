#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lnmin/errors.hpp"
#include "lnmin/rng.hpp"
#include "lnmin/vectors.hpp"

using namespace lnmin;

TEST_CASE("asymmetric max norm on fixed vectors") {
  CHECK(linf_pm_norm(RealVec{0, 0, 0}) == 0.0);
  CHECK(linf_pm_norm(RealVec{2, -2}) == 4.0);
  CHECK(linf_pm_norm(RealVec{3, 1, -0.5}) == 3.5);
  CHECK(linf_pm_norm(IntVec{2, -2}) == 4);
  CHECK(linf_pm_norm(IntVec{1, 2}) == 2);
  CHECK(linf_pm_norm(IntVec{-1, -3}) == 3);
}

TEST_CASE("asymmetric max norm rejects bad input") {
  CHECK_THROWS_AS(linf_pm_norm(RealVec{}), PreconditionError);
  CHECK_THROWS_AS(linf_pm_norm(RealVec{1.0, std::nan("")}), PreconditionError);
}

TEST_CASE("asymmetric max norm satisfies norm axioms on samples") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    RealVec u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      u[static_cast<size_t>(i)] = rng.uniform_real(-10, 10);
      v[static_cast<size_t>(i)] = rng.uniform_real(-10, 10);
    }
    const double nu = linf_pm_norm(u);
    const double nv = linf_pm_norm(v);
    CHECK(nu >= 0);

    double max_abs = 0;
    bool zero = true;
    for (double x : u) {
      max_abs = std::max(max_abs, std::abs(x));
      if (x != 0) zero = false;
    }
    CHECK((nu == 0) == zero);
    CHECK(nu <= 2 * max_abs + 1e-12);
    CHECK(nu >= max_abs - 1e-12);

    const double lambda = rng.uniform_real(-3, 3);
    RealVec lu = u, sum = u;
    for (size_t i = 0; i < u.size(); ++i) {
      lu[i] = lambda * u[i];
      sum[i] = u[i] + v[i];
    }
    CHECK(linf_pm_norm(lu) == doctest::Approx(std::abs(lambda) * nu).epsilon(1e-9));
    CHECK(linf_pm_norm(sum) <= nu + nv + 1e-9);
  }
}

TEST_CASE("half-down rounding on fixed vectors") {
  CHECK(round_half_down(RealVec{0.4, 0.6}) == IntVec{0, 1});
  CHECK(round_half_down(RealVec{1.5, 2.5}) == IntVec{1, 2});
  CHECK(round_half_down(RealVec{-0.5}) == IntVec{-1});
  CHECK(round_half_down(RealVec{-2.3, 2.3}) == IntVec{-2, 2});
  CHECK(round_half_down(RealVec{-1.5}) == IntVec{-2});
  // floating-point dust above a half stays in the down-rounding band
  CHECK(round_half_down(RealVec{0.5 + 1e-9, -0.5 + 1e-9}) == IntVec{0, -1});
  CHECK(round_half_down(RealVec{0.5 + 1e-5}) == IntVec{1});
}

TEST_CASE("half-down rounding moves entries by at most a half") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = rng.uniform_real(-50, 50);
    const IntVec r = round_half_down(RealVec{x});
    const double moved = static_cast<double>(r[0]) - x;
    CHECK(std::abs(moved) <= 0.5 + 1e-6 + 1e-12);
    // the +0.5 boundary (plus its guard band) goes down, so the rounded
    // value never sits half a unit above the input
    if (moved >= 0.5 - 1e-12) CHECK(std::abs(moved - 0.5) > 1e-12);
  }
  CHECK(round_half_down(RealVec{7.5}) == IntVec{7});
}

TEST_CASE("lattice operations on fixed vectors") {
  const LatticeMidpoints a = lattice_ops(IntVec{1, 3}, IntVec{3, 1});
  CHECK(a.join == IntVec{3, 3});
  CHECK(a.meet == IntVec{1, 1});
  CHECK(a.ceil_mid == IntVec{2, 2});
  CHECK(a.floor_mid == IntVec{2, 2});

  const LatticeMidpoints b = lattice_ops(IntVec{0, 1}, IntVec{1, 0});
  CHECK(b.ceil_mid == IntVec{1, 1});
  CHECK(b.floor_mid == IntVec{0, 0});

  const LatticeMidpoints c = lattice_ops(IntVec{5, 5}, IntVec{5, 5});
  CHECK(c.join == IntVec{5, 5});
  CHECK(c.meet == IntVec{5, 5});
  CHECK(c.ceil_mid == IntVec{5, 5});
  CHECK(c.floor_mid == IntVec{5, 5});

  CHECK_THROWS_AS(lattice_ops(IntVec{1}, IntVec{1, 2}), PreconditionError);
}

TEST_CASE("midpoints of negative odd sums stay aligned") {
  const LatticeMidpoints m = lattice_ops(IntVec{-2}, IntVec{-3});
  CHECK(m.ceil_mid == IntVec{-2});
  CHECK(m.floor_mid == IntVec{-3});
}

TEST_CASE("midpoint pair always sums back to the inputs") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    IntVec p(static_cast<size_t>(n)), q(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      p[static_cast<size_t>(i)] = rng.uniform_int(-20, 20);
      q[static_cast<size_t>(i)] = rng.uniform_int(-20, 20);
    }
    const LatticeMidpoints m = lattice_ops(p, q);
    for (int i = 0; i < n; ++i) {
      const size_t k = static_cast<size_t>(i);
      CHECK(m.ceil_mid[k] + m.floor_mid[k] == p[k] + q[k]);
      CHECK(m.join[k] + m.meet[k] == p[k] + q[k]);
      CHECK(m.floor_mid[k] <= m.ceil_mid[k]);
      CHECK(m.ceil_mid[k] - m.floor_mid[k] <= 1);
    }
  }
}
