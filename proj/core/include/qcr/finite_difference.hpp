#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>

#include "qcr/errors.hpp"
#include "qcr/expr.hpp"

namespace qcr {

struct FDSettings {
  // First-derivative base step.
  double h1 = 6e-6;
  // Second-derivative base step.
  double h2 = 1.2e-4;

  // Throws PreconditionError unless both steps are positive and finite.
  void validate() const;
};

namespace detail {

inline void check_axis(int axis) {
  if (axis < 1 || axis > 4) {
    throw PreconditionError("finite difference axis must be in 1..4");
  }
}

inline double scaled_step(double base, const Point4& p, int axis) {
  return base * std::max(1.0, std::abs(p[axis - 1]));
}

inline Point4 shifted(Point4 p, int axis, double delta) {
  p[axis - 1] += delta;
  return p;
}

}  // namespace detail

// Central first difference along `axis` (1..4).
template <typename F>
  requires std::invocable<F&, const Point4&>
double partial1_fd(F&& f, const Point4& p, int axis,
                   const FDSettings& s = {}) {
  detail::check_axis(axis);
  const double h = detail::scaled_step(s.h1, p, axis);
  return (f(detail::shifted(p, axis, h)) - f(detail::shifted(p, axis, -h))) /
         (2.0 * h);
}

// Pure (axis_m == axis_n) three-point or mixed four-point cross stencil.
template <typename F>
  requires std::invocable<F&, const Point4&>
double partial2_fd(F&& f, const Point4& p, int axis_m, int axis_n,
                   const FDSettings& s = {}) {
  detail::check_axis(axis_m);
  detail::check_axis(axis_n);
  if (axis_m == axis_n) {
    const double h = detail::scaled_step(s.h2, p, axis_m);
    return (f(detail::shifted(p, axis_m, h)) - 2.0 * f(p) +
            f(detail::shifted(p, axis_m, -h))) /
           (h * h);
  }
  const double hm = detail::scaled_step(s.h2, p, axis_m);
  const double hn = detail::scaled_step(s.h2, p, axis_n);
  auto at = [&](double dm, double dn) {
    return f(detail::shifted(detail::shifted(p, axis_m, dm), axis_n, dn));
  };
  return (at(hm, hn) - at(hm, -hn) - at(-hm, hn) + at(-hm, -hn)) /
         (4.0 * hm * hn);
}

// Expr conveniences; evaluation errors propagate.
double partial1_fd(const Expr& e, const Point4& p, int axis,
                   const FDSettings& s = {});
double partial2_fd(const Expr& e, const Point4& p, int axis_m, int axis_n,
                   const FDSettings& s = {});

}  // namespace qcr
