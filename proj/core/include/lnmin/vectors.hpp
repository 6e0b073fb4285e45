#pragma once

#include <vector>

namespace lnmin {

using IntVec = std::vector<long long>;
using RealVec = std::vector<double>;

RealVec to_real(const IntVec& v);

// Largest positive entry plus largest negative magnitude, each floored at
// zero. Not a norm in the usual sense: it is asymmetric under sign flips of
// individual entries but satisfies ||v|| = ||-v|| as a whole, and
// max_i |v_i| <= ||v|| <= 2 max_i |v_i|.
double linf_pm_norm(const RealVec& v);
long long linf_pm_norm(const IntVec& v);

// Nearest integer per entry, with fractional parts of exactly one half
// rounded down: 1.5 -> 1 and -0.5 -> -1. Values within 1e-6 above a half
// also round down, so points computed from tight constraints keep rounding
// consistently in the presence of floating-point error.
IntVec round_half_down(const RealVec& v);

struct LatticeMidpoints {
  IntVec join;       // element-wise max
  IntVec meet;       // element-wise min
  IntVec ceil_mid;   // ceil((p + q) / 2), element-wise
  IntVec floor_mid;  // floor((p + q) / 2), element-wise
};

LatticeMidpoints lattice_ops(const IntVec& p, const IntVec& q);

}  // namespace lnmin
