#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <variant>
#include <vector>

#include "qcr/expr.hpp"
#include "qcr/quaternion.hpp"

namespace qcr {

enum class Convention { left, right };

std::string_view convention_name(Convention c);

struct Polyline {
  std::vector<Quaternion> waypoints;
};

// q(t) = q1(t) + q2(t) i + q3(t) j + q4(t) k for t in [t0, t1].
struct Parametric {
  std::array<Expr, 4> q;
  double t0 = 0.0;
  double t1 = 1.0;
};

inline constexpr int kDefaultSegmentsPerUnit = 64;

class Path {
 public:
  // Throws PreconditionError for fewer than two waypoints, t0 >= t1, or a
  // non-positive density.
  static Path polyline(std::vector<Quaternion> waypoints,
                       int segments_per_unit = kDefaultSegmentsPerUnit);
  static Path parametric(std::array<Expr, 4> q, double t0, double t1,
                         int segments_per_unit = kDefaultSegmentsPerUnit);

  const std::variant<Polyline, Parametric>& shape() const { return shape_; }
  int segments_per_unit() const { return segments_per_unit_; }
  Path with_density(int segments_per_unit) const;

  Quaternion start() const;
  Quaternion end() const;
  // Same curve traversed backwards.
  Path reversed() const;
  // Polyline continuing from this one's end; both must be polylines.
  Path concatenated(const Path& next) const;

 private:
  Path(std::variant<Polyline, Parametric> shape, int segments_per_unit);

  std::variant<Polyline, Parametric> shape_;
  int segments_per_unit_;
};

// Path file: either `waypoints = (w,x,y,z); (w,x,y,z); ...` or q1..q4 as
// expressions in t together with `t0 = ...` and `t1 = ...`.
Path parse_path_file(std::string_view text, std::string_view source,
                     int segments_per_unit = kDefaultSegmentsPerUnit);
Path load_path_file(const std::filesystem::path& path,
                    int segments_per_unit = kDefaultSegmentsPerUnit);

struct IntegralResult {
  Quaternion value;
  // norm of the difference between density d and 2d results.
  double abs_error_estimate = 0.0;
  Convention convention = Convention::left;
};

// Composite 5-point Gauss-Legendre evaluation of the integral of
// f(q(t)) q'(t) (left) or q'(t) f(q(t)) (right).
IntegralResult integrate_f_dq(const QuatFunction& f, const Path& path,
                              Convention convention = Convention::left);

struct FundamentalTheoremResult {
  // Line integral of grad F_m along the path.
  std::array<double, 4> integral{};
  // F_m(b) - F_m(a), the orientation the residual is measured against.
  std::array<double, 4> end_minus_start{};
  // F_m(a) - F_m(b), reported for comparison only.
  std::array<double, 4> start_minus_end{};
  std::array<double, 4> residual{};
};

FundamentalTheoremResult fundamental_theorem_check(const QuatFunction& f,
                                                   const Path& path);

class Sampler;

// Random polyline a -> b through 3..6 interior waypoints drawn uniformly from
// the bounding box of {a, b} inflated by 1 on every side.
Path random_polyline(const Quaternion& a, const Quaternion& b,
                     Sampler& sampler,
                     int segments_per_unit = kDefaultSegmentsPerUnit);

struct ProbeReport {
  std::vector<Path> paths;
  std::vector<IntegralResult> integrals;
  // Largest |I_p[c] - I_q[c]| over path pairs and components.
  double max_deviation = 0.0;
  std::array<double, 4> component_deviation{};
  Convention convention = Convention::left;
};

ProbeReport path_independence_probe(
    const QuatFunction& f, const Quaternion& a, const Quaternion& b,
    int n_paths, std::uint64_t seed, Convention convention = Convention::left,
    int segments_per_unit = kDefaultSegmentsPerUnit);

}  // namespace qcr
