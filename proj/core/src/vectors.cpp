#include "lnmin/vectors.hpp"

#include <algorithm>
#include <cmath>

#include "lnmin/errors.hpp"

namespace lnmin {

namespace {

long long floor_div2(long long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

RealVec to_real(const IntVec& v) {
  RealVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = static_cast<double>(v[k]);
  return out;
}

double linf_pm_norm(const RealVec& v) {
  if (v.empty()) throw PreconditionError("linf_pm_norm: empty vector");
  double pos = 0, neg = 0;
  for (double x : v) {
    if (!std::isfinite(x)) throw PreconditionError("linf_pm_norm: non-finite entry");
    pos = std::max(pos, x);
    neg = std::max(neg, -x);
  }
  return pos + neg;
}

long long linf_pm_norm(const IntVec& v) {
  if (v.empty()) throw PreconditionError("linf_pm_norm: empty vector");
  long long pos = 0, neg = 0;
  for (long long x : v) {
    pos = std::max(pos, x);
    neg = std::max(neg, -x);
  }
  return pos + neg;
}

IntVec round_half_down(const RealVec& v) {
  // The boundary sits a hair above one half. Projections make difference
  // constraints exactly tight, so coordinates often land on half-integers up
  // to floating-point dust; a plain > 0.5 test could then round the two ends
  // of a tight constraint in opposite directions and break feasibility. The
  // band keeps the map monotone and shift-commuting, which is all the
  // feasibility argument needs.
  constexpr double kHalfBand = 1e-6;
  IntVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double x = v[k];
    if (!std::isfinite(x)) throw PreconditionError("round_half_down: non-finite entry");
    const double fl = std::floor(x);
    const double frac = x - fl;
    out[k] = static_cast<long long>(fl) + (frac > 0.5 + kHalfBand ? 1 : 0);
  }
  return out;
}

LatticeMidpoints lattice_ops(const IntVec& p, const IntVec& q) {
  if (p.size() != q.size()) throw PreconditionError("lattice_ops: length mismatch");
  const std::size_t n = p.size();
  LatticeMidpoints out;
  out.join.resize(n);
  out.meet.resize(n);
  out.ceil_mid.resize(n);
  out.floor_mid.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.join[k] = std::max(p[k], q[k]);
    out.meet[k] = std::min(p[k], q[k]);
    const long long s = p[k] + q[k];
    out.floor_mid[k] = floor_div2(s);
    out.ceil_mid[k] = s - out.floor_mid[k];
  }
  return out;
}

}  // namespace lnmin
