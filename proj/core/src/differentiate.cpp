#include "qcr/expr.hpp"

namespace qcr {
namespace {

Expr d(const Expr& e, Variable v) {
  if (!e.uses(v)) return Expr::literal(0.0);
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode>) {
          return Expr::literal(0.0);
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return Expr::literal(n.var == v ? 1.0 : 0.0);
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          const Expr& a = n.arg;
          const Expr da = d(a, v);
          switch (n.op) {
            case UnaryOp::neg: return -da;
            case UnaryOp::sin: return cos(a) * da;
            case UnaryOp::cos: return -sin(a) * da;
            case UnaryOp::exp: return exp(a) * da;
            case UnaryOp::log: return da / a;
            case UnaryOp::sqrt: return da / (Expr::literal(2.0) * sqrt(a));
          }
          return Expr::literal(0.0);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const Expr& a = n.lhs;
          const Expr& b = n.rhs;
          switch (n.op) {
            case BinaryOp::add: return d(a, v) + d(b, v);
            case BinaryOp::sub: return d(a, v) - d(b, v);
            case BinaryOp::mul: return d(a, v) * b + a * d(b, v);
            case BinaryOp::div:
              return (d(a, v) * b - a * d(b, v)) / pow(b, 2);
          }
          return Expr::literal(0.0);
        } else {
          if (n.exponent == 0) return Expr::literal(0.0);
          return Expr::literal(n.exponent) * pow(n.base, n.exponent - 1) *
                 d(n.base, v);
        }
      },
      e.node().v);
}

}  // namespace

Expr differentiate(const Expr& e, Variable v) { return simplify(d(e, v)); }

}  // namespace qcr
