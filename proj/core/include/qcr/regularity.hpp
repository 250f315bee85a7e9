#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcr/check_options.hpp"
#include "qcr/expr.hpp"

namespace qcr {

// sign * dF_component / dx_axis, or, when inner_axis != 0,
// sign * d^2 F_component / (dx_axis dx_inner_axis). Components and axes are
// 1-based.
struct SignedPartial {
  int sign = 1;
  int component = 1;
  int axis = 1;
  int inner_axis = 0;

  int order() const { return inner_axis == 0 ? 1 : 2; }
  friend bool operator==(const SignedPartial&, const SignedPartial&) = default;
};

// sum(lhs) == sum(rhs). The quaternionic relation set uses a single term on
// each side; the Fueter variant uses four terms against an empty side.
struct Constraint {
  std::string id;
  std::vector<SignedPartial> lhs;
  std::vector<SignedPartial> rhs;
};

enum class Variant { relations, fueter_left };

std::string_view variant_name(Variant v);

// The twelve first-order relations, in chain order:
//   dF1/dx1 = dF2/dx2 = dF3/dx3 = dF4/dx4
//   dF2/dx1 = -dF1/dx2 = -dF3/dx4 = dF4/dx3
//   dF3/dx1 = -dF1/dx3 = -dF2/dx4 = dF4/dx2
//   dF4/dx1 = dF1/dx4 = -dF2/dx3 = -dF3/dx2
// Each chain a=b=c=d is stored as its adjacent pairs a=b, b=c, c=d.
std::vector<Constraint> relation_constraints();

// The 48 second-order relations obtained by differentiating each chain along
// x1..x4, each term keeping its own differentiation order.
std::vector<Constraint> second_order_chains();

// Generic derivation: every constraint differentiated along x1..x4,
// grouped by chain of three (or by constraint when not chained).
std::vector<Constraint> differentiate_constraints(
    std::span<const Constraint> first_order);

// Left Cauchy-Fueter operator components: for D = d1 + i d2 + j d3 + k d4,
// each quaternion component of D F equals zero.
std::vector<Constraint> fueter_left_constraints();

// du/dx1 = dv/dx2 and du/dx2 = -dv/dx1, with u, v as components 1, 2.
std::vector<Constraint> complex_constraints();

std::string describe(const SignedPartial& term,
                     std::span<const std::string> component_names);
std::string describe(std::span<const SignedPartial> side,
                     std::span<const std::string> component_names);

struct ConstraintResult {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  // Set in symbolic mode.
  std::optional<bool> symbolic_pass;
  // Simplified lhs - rhs, symbolic mode only.
  std::string residual_expr;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  Point4 worst_point{};
};

struct ConstraintReport {
  CheckMode mode = CheckMode::symbolic;
  std::vector<ConstraintResult> results;
  bool pass = false;
  int points_tested = 0;
  int points_skipped = 0;
  double tolerance = 0.0;
  std::vector<std::string> notes;

  const ConstraintResult* find(std::string_view id) const;
};

// Evaluates constraints over named components. With options.tol unset the
// tolerance is kSymbolicTolerance (symbolic) or, numerically, the first- or
// second-order default according to the highest derivative order present.
ConstraintReport check_constraints(std::span<const Expr> components,
                                   std::span<const std::string> names,
                                   std::span<const Constraint> constraints,
                                   const CheckOptions& options);

ConstraintReport check_cr_symbolic(const QuatFunction& f,
                                   std::uint64_t seed = kDefaultSeed,
                                   Variant variant = Variant::relations);
ConstraintReport check_cr_numeric(const QuatFunction& f, int points,
                                  double tol, std::uint64_t seed,
                                  const FDSettings& s = {},
                                  Variant variant = Variant::relations);
ConstraintReport check_cr(const QuatFunction& f, const CheckOptions& options,
                          Variant variant = Variant::relations);
ConstraintReport check_second_order_chains(const QuatFunction& f,
                                           const CheckOptions& options,
                                           Variant variant = Variant::relations);
ConstraintReport check_cr_complex(const Expr& u, const Expr& v,
                                  const CheckOptions& options);

// Linear function whose Jacobian is the four-parameter pattern forced by
// relation_constraints():
//   F1 = a1 x1 - a2 x2 - a3 x3 + a4 x4
//   F2 = a2 x1 + a1 x2 - a4 x3 - a3 x4
//   F3 = a3 x1 - a4 x2 + a1 x3 - a2 x4
//   F4 = a4 x1 + a3 x2 + a2 x3 + a1 x4
QuatFunction structure_linear_function(double a1, double a2, double a3,
                                       double a4);

}  // namespace qcr
