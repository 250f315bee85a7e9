#include <algorithm>
#include <cmath>
#include <string>

#include "qcr/errors.hpp"
#include "qcr/expr.hpp"

namespace qcr {
namespace {

[[noreturn]] void domain_error(const Expr& node, const std::string& what) {
  throw DomainError("domain error in '" + to_string(node) + "': " + what);
}

double checked(const Expr& node, double value) {
  if (!std::isfinite(value)) domain_error(node, "non-finite result");
  return value;
}

std::string arg_text(double x) {
  std::string s = std::to_string(x);
  return "argument " + s;
}

// `track` receives every subexpression value except the root's.
template <bool Track>
double eval(const Expr& e, const Bindings& b, double& max_abs, bool root) {
  const double value = std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          const auto v = b.get(n.var);
          if (!v) throw MissingVariableError(std::string(variable_name(n.var)));
          return *v;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          const double x = eval<Track>(n.arg, b, max_abs, false);
          switch (n.op) {
            case UnaryOp::neg: return -x;
            case UnaryOp::sin: return std::sin(x);
            case UnaryOp::cos: return std::cos(x);
            case UnaryOp::exp: return checked(e, std::exp(x));
            case UnaryOp::log:
              if (!(x > 0.0)) domain_error(e, "log of non-positive " + arg_text(x));
              return std::log(x);
            case UnaryOp::sqrt:
              if (x < 0.0) domain_error(e, "sqrt of negative " + arg_text(x));
              return std::sqrt(x);
          }
          return 0.0;
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const double l = eval<Track>(n.lhs, b, max_abs, false);
          const double r = eval<Track>(n.rhs, b, max_abs, false);
          switch (n.op) {
            case BinaryOp::add: return checked(e, l + r);
            case BinaryOp::sub: return checked(e, l - r);
            case BinaryOp::mul: return checked(e, l * r);
            case BinaryOp::div:
              if (r == 0.0) domain_error(e, "division by zero");
              return checked(e, l / r);
          }
          return 0.0;
        } else {
          const double x = eval<Track>(n.base, b, max_abs, false);
          if (x == 0.0 && n.exponent < 0) {
            domain_error(e, "zero raised to a negative power");
          }
          return checked(e, std::pow(x, n.exponent));
        }
      },
      e.node().v);
  if constexpr (Track) {
    if (!root) max_abs = std::max(max_abs, std::abs(value));
  }
  return value;
}

}  // namespace

double evaluate(const Expr& e, const Bindings& b) {
  double unused = 0.0;
  return eval<false>(e, b, unused, true);
}

double evaluate(const Expr& e, const Point4& x) {
  return evaluate(e, Bindings::point(x));
}

double evaluate(const Expr& e, std::span<const double> point) {
  if (point.size() == 4) {
    return evaluate(e, Point4{point[0], point[1], point[2], point[3]});
  }
  if (point.size() == 1) return evaluate(e, Bindings::time(point[0]));
  throw PreconditionError("evaluate: point must have 4 coordinates or 1 (t)");
}

double evaluate_tracked(const Expr& e, const Bindings& b,
                        double& max_sub_abs) {
  max_sub_abs = 0.0;
  return eval<true>(e, b, max_sub_abs, true);
}

}  // namespace qcr
