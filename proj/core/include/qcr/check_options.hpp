#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcr/finite_difference.hpp"

namespace qcr {

enum class CheckMode { symbolic, numeric };

std::string_view mode_name(CheckMode mode);

inline constexpr int kSymbolicTrials = 32;
inline constexpr double kSymbolicTolerance = 1e-9;
inline constexpr double kNumericFirstOrderTolerance = 1e-6;
inline constexpr double kNumericSecondOrderTolerance = 1e-3;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct CheckOptions {
  CheckMode mode = CheckMode::symbolic;
  // Sample points for numeric mode. Symbolic mode always uses
  // kSymbolicTrials identity-test points.
  int points = 100;
  // Unset means the per-check default for the mode.
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  FDSettings fd;
  // Numeric mode: when non-empty these points replace the seeded draws.
  std::vector<Point4> sample_points;
};

// The points a numeric check visits: sample_points if given, otherwise
// `points` seeded draws from [-2,2]^4.
std::vector<Point4> numeric_points(const CheckOptions& options);

}  // namespace qcr
