#pragma once

#include <cstdint>
#include <random>

#include "qcr/expr.hpp"

namespace qcr {

// Seeded uniform sampler. The mapping from engine output to doubles is
// spelled out here (not std::uniform_real_distribution) so sample sequences
// are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1p-53;
    return lo + (hi - lo) * unit;
  }

  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  Point4 point(double lo, double hi) {
    Point4 p;
    for (double& c : p) c = uniform(lo, hi);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

// Box used for every random-point check.
inline constexpr double kSampleLo = -2.0;
inline constexpr double kSampleHi = 2.0;

}  // namespace qcr
