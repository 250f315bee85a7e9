#include <cmath>

#include "qcr/expr.hpp"

namespace qcr {
namespace {

Expr lit(double v) { return Expr::literal(v == 0.0 ? 0.0 : v); }

std::optional<double> fold_unary(UnaryOp op, double x) {
  double r = 0.0;
  switch (op) {
    case UnaryOp::neg: r = -x; break;
    case UnaryOp::sin: r = std::sin(x); break;
    case UnaryOp::cos: r = std::cos(x); break;
    case UnaryOp::exp: r = std::exp(x); break;
    case UnaryOp::log:
      if (!(x > 0.0)) return std::nullopt;
      r = std::log(x);
      break;
    case UnaryOp::sqrt:
      if (x < 0.0) return std::nullopt;
      r = std::sqrt(x);
      break;
  }
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

std::optional<double> fold_binary(BinaryOp op, double l, double r) {
  double v = 0.0;
  switch (op) {
    case BinaryOp::add: v = l + r; break;
    case BinaryOp::sub: v = l - r; break;
    case BinaryOp::mul: v = l * r; break;
    case BinaryOp::div:
      if (r == 0.0) return std::nullopt;
      v = l / r;
      break;
  }
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

Expr rewrite_unary(UnaryOp op, const Expr& arg) {
  if (const auto x = arg.literal_value()) {
    if (const auto r = fold_unary(op, *x)) return lit(*r);
  }
  if (op == UnaryOp::neg) {
    if (const auto* inner = std::get_if<UnaryNode>(&arg.node().v)) {
      if (inner->op == UnaryOp::neg) return inner->arg;
    }
  }
  return Expr::unary(op, arg);
}

Expr rewrite_binary(BinaryOp op, const Expr& l, const Expr& r) {
  const auto lv = l.literal_value();
  const auto rv = r.literal_value();
  if (lv && rv) {
    if (const auto v = fold_binary(op, *lv, *rv)) return lit(*v);
  }
  switch (op) {
    case BinaryOp::add:
      if (l.is_literal(0.0)) return r;
      if (r.is_literal(0.0)) return l;
      break;
    case BinaryOp::sub:
      if (r.is_literal(0.0)) return l;
      break;
    case BinaryOp::mul:
      if (l.is_literal(0.0) || r.is_literal(0.0)) return lit(0.0);
      if (l.is_literal(1.0)) return r;
      if (r.is_literal(1.0)) return l;
      break;
    case BinaryOp::div:
      if (r.is_literal(1.0)) return l;
      break;
  }
  return Expr::binary(op, l, r);
}

Expr rewrite_pow(const Expr& base, int exponent) {
  if (exponent == 0) return lit(1.0);
  if (exponent == 1) return base;
  if (const auto x = base.literal_value()) {
    if (!(*x == 0.0 && exponent < 0)) {
      const double v = std::pow(*x, exponent);
      if (std::isfinite(v)) return lit(v);
    }
  }
  return Expr::pow(base, exponent);
}

Expr simplify_once(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode> ||
                      std::is_same_v<T, VariableNode>) {
          return e;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return rewrite_unary(n.op, simplify_once(n.arg));
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return rewrite_binary(n.op, simplify_once(n.lhs),
                                simplify_once(n.rhs));
        } else {
          return rewrite_pow(simplify_once(n.base), n.exponent);
        }
      },
      e.node().v);
}

}  // namespace

Expr simplify(const Expr& e) {
  Expr current = simplify_once(e);
  // Every rewrite shrinks the tree, so this terminates.
  for (;;) {
    Expr next = simplify_once(current);
    if (next == current) return next;
    current = std::move(next);
  }
}

}  // namespace qcr
