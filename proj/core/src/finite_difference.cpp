#include "qcr/finite_difference.hpp"

#include <cmath>

namespace qcr {

void FDSettings::validate() const {
  if (!(h1 > 0.0) || !std::isfinite(h1) || !(h2 > 0.0) || !std::isfinite(h2)) {
    throw PreconditionError("finite-difference steps must be positive");
  }
}

double partial1_fd(const Expr& e, const Point4& p, int axis,
                   const FDSettings& s) {
  return partial1_fd([&e](const Point4& x) { return evaluate(e, x); }, p,
                     axis, s);
}

double partial2_fd(const Expr& e, const Point4& p, int axis_m, int axis_n,
                   const FDSettings& s) {
  return partial2_fd([&e](const Point4& x) { return evaluate(e, x); }, p,
                     axis_m, axis_n, s);
}

}  // namespace qcr
