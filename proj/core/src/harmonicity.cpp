#include "qcr/harmonicity.hpp"

#include <cmath>
#include <span>

#include "qcr/errors.hpp"
#include "qcr/sampling.hpp"

namespace qcr {
namespace {

constexpr double kNumericHarmonicTolerance = 1e-3;

HarmonicReport check(std::span<const Expr> components,
                     std::span<const std::string> names, int dims,
                     const CheckOptions& options) {
  HarmonicReport report;
  report.mode = options.mode;
  report.tolerance = options.tol.value_or(options.mode == CheckMode::symbolic
                                              ? kSymbolicTolerance
                                              : kNumericHarmonicTolerance);
  if (!(report.tolerance > 0.0)) {
    throw PreconditionError("tolerance must be > 0");
  }

  if (options.mode == CheckMode::symbolic) {
    report.points_tested = kSymbolicTrials;
    bool all = true;
    for (std::size_t m = 0; m < components.size(); ++m) {
      ComponentHarmonicResult r;
      r.name = names[m];
      const Expr lap = laplacian_symbolic(components[m], dims);
      r.laplacian_expr = to_string(lap);
      const ZeroTestResult z =
          zero_test(lap, kSymbolicTrials, report.tolerance, options.seed);
      r.pass = z.zero;
      r.residual_max = z.max_abs;
      r.residual_mean = z.mean_abs;
      r.worst_point = z.worst_point;
      report.points_skipped += z.points_skipped;
      all = all && r.pass;
      report.components.push_back(std::move(r));
    }
    report.pass = all;
    return report;
  }

  options.fd.validate();
  const std::size_t count = components.size();
  std::vector<double> max_r(count, 0.0), sum_r(count, 0.0), residual(count);
  std::vector<Point4> worst(count, Point4{});
  int evaluated = 0;
  const std::vector<Point4> points = numeric_points(options);
  report.points_tested = static_cast<int>(points.size());
  for (const Point4& p : points) {
    try {
      for (std::size_t m = 0; m < count; ++m) {
        residual[m] = std::abs(laplacian_fd(components[m], p, dims, options.fd));
      }
    } catch (const DomainError&) {
      ++report.points_skipped;
      continue;
    }
    for (std::size_t m = 0; m < count; ++m) {
      sum_r[m] += residual[m];
      if (residual[m] > max_r[m] || evaluated == 0 || std::isnan(residual[m])) {
        max_r[m] = residual[m];
        worst[m] = p;
      }
    }
    ++evaluated;
  }
  const bool too_many_skipped = 2 * report.points_skipped > report.points_tested;
  if (report.points_skipped > 0) {
    report.notes.push_back(std::to_string(report.points_skipped) + " of " +
                           std::to_string(report.points_tested) +
                           " sample points skipped after domain errors");
  }
  if (too_many_skipped) {
    report.notes.push_back("more than half of the sample points skipped");
  }
  bool all = !too_many_skipped;
  for (std::size_t m = 0; m < count; ++m) {
    ComponentHarmonicResult r;
    r.name = names[m];
    r.residual_max = max_r[m];
    r.residual_mean = evaluated > 0 ? sum_r[m] / evaluated : 0.0;
    r.worst_point = worst[m];
    r.pass = evaluated > 0 && !too_many_skipped && max_r[m] <= report.tolerance;
    all = all && r.pass;
    report.components.push_back(std::move(r));
  }
  report.pass = all;
  return report;
}

}  // namespace

Expr laplacian_symbolic(const Expr& e, int dims) {
  if (dims < 1 || dims > 4) throw PreconditionError("dims must be in 1..4");
  Expr sum;
  for (int n = 1; n <= dims; ++n) {
    const Variable v = axis_variable(n);
    const Expr second = differentiate(differentiate(e, v), v);
    sum = n == 1 ? second : sum + second;
  }
  return simplify(sum);
}

double laplacian_fd(const Expr& e, const Point4& p, int dims,
                    const FDSettings& s) {
  if (dims < 1 || dims > 4) throw PreconditionError("dims must be in 1..4");
  double sum = 0.0;
  for (int n = 1; n <= dims; ++n) sum += partial2_fd(e, p, n, n, s);
  return sum;
}

HarmonicReport check_harmonic(const QuatFunction& f,
                              const CheckOptions& options) {
  static const std::array<std::string, 4> kNames = {"F1", "F2", "F3", "F4"};
  return check(f.components, kNames, 4, options);
}

HarmonicReport check_harmonic_complex(const Expr& u, const Expr& v,
                                      const CheckOptions& options) {
  static const std::array<std::string, 2> kNames = {"u", "v"};
  const std::array<Expr, 2> components = {u, v};
  return check(components, kNames, 2, options);
}

}  // namespace qcr
