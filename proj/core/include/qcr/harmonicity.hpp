#pragma once

#include <string>
#include <vector>

#include "qcr/check_options.hpp"
#include "qcr/expr.hpp"

namespace qcr {

struct ComponentHarmonicResult {
  std::string name;
  // Simplified symbolic Laplacian, symbolic mode only.
  std::string laplacian_expr;
  bool pass = false;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  Point4 worst_point{};
};

struct HarmonicReport {
  CheckMode mode = CheckMode::symbolic;
  std::vector<ComponentHarmonicResult> components;
  bool pass = false;
  int points_tested = 0;
  int points_skipped = 0;
  double tolerance = 0.0;
  std::vector<std::string> notes;
};

// Sum of pure second partials over x1..x_dims, simplified.
Expr laplacian_symbolic(const Expr& e, int dims = 4);

// Sum of `dims` central second differences.
double laplacian_fd(const Expr& e, const Point4& p, int dims = 4,
                    const FDSettings& s = {});

HarmonicReport check_harmonic(const QuatFunction& f,
                              const CheckOptions& options);
HarmonicReport check_harmonic_complex(const Expr& u, const Expr& v,
                                      const CheckOptions& options);

}  // namespace qcr
