#pragma once

#include <cstdint>
#include <random>

#include "lnmin/errors.hpp"

namespace lnmin {

// Deterministic random source. The mt19937_64 engine output is pinned by the
// standard, and the draw helpers below avoid std::uniform_int_distribution,
// whose results differ across standard libraries. Streams produced from the
// same seed are therefore identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi], by rejection from a power-of-two range.
  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw PreconditionError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t mask = span - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t draw = engine_() & mask;
      if (draw < span) return lo + static_cast<long long>(draw);
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lnmin
