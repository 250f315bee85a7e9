#include "qcr/expr.hpp"

#include <utility>

#include "qcr/errors.hpp"

namespace qcr {

std::string_view variable_name(Variable v) {
  switch (v) {
    case Variable::x1: return "x1";
    case Variable::x2: return "x2";
    case Variable::x3: return "x3";
    case Variable::x4: return "x4";
    case Variable::t: return "t";
  }
  return "?";
}

Variable axis_variable(int axis) {
  if (axis < 1 || axis > 4) {
    throw PreconditionError("axis must be in 1..4, got " +
                            std::to_string(axis));
  }
  return static_cast<Variable>(axis - 1);
}

Expr::Expr() : Expr(literal(0.0)) {}

Expr::Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

Expr Expr::literal(double value) {
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{LiteralNode{value}, 0}));
}

Expr Expr::variable(Variable v) {
  const auto mask = static_cast<std::uint8_t>(1U << static_cast<int>(v));
  return Expr(std::make_shared<const ExprNode>(ExprNode{VariableNode{v}, mask}));
}

Expr Expr::unary(UnaryOp op, Expr arg) {
  const std::uint8_t mask = arg.variable_mask();
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{UnaryNode{op, std::move(arg)}, mask}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  const auto mask =
      static_cast<std::uint8_t>(lhs.variable_mask() | rhs.variable_mask());
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}, mask}));
}

Expr Expr::pow(Expr base, int exponent) {
  const std::uint8_t mask = base.variable_mask();
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{PowNode{std::move(base), exponent}, mask}));
}

bool Expr::is_literal() const {
  return std::holds_alternative<LiteralNode>(node_->v);
}

std::optional<double> Expr::literal_value() const {
  if (const auto* lit = std::get_if<LiteralNode>(&node_->v)) return lit->value;
  return std::nullopt;
}

bool Expr::is_literal(double value) const {
  const auto v = literal_value();
  return v && *v == value;
}

std::uint8_t Expr::variable_mask() const { return node_->variable_mask; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  if (va.index() != vb.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(vb);
        if constexpr (std::is_same_v<T, LiteralNode>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return na.var == nb.var;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return na.op == nb.op && na.arg == nb.arg;
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return na.op == nb.op && na.lhs == nb.lhs && na.rhs == nb.rhs;
        } else {
          return na.exponent == nb.exponent && na.base == nb.base;
        }
      },
      va);
}

Expr operator+(const Expr& a, const Expr& b) {
  return Expr::binary(BinaryOp::add, a, b);
}
Expr operator-(const Expr& a, const Expr& b) {
  return Expr::binary(BinaryOp::sub, a, b);
}
Expr operator*(const Expr& a, const Expr& b) {
  return Expr::binary(BinaryOp::mul, a, b);
}
Expr operator/(const Expr& a, const Expr& b) {
  return Expr::binary(BinaryOp::div, a, b);
}
Expr operator-(const Expr& a) { return Expr::unary(UnaryOp::neg, a); }
Expr sin(const Expr& a) { return Expr::unary(UnaryOp::sin, a); }
Expr cos(const Expr& a) { return Expr::unary(UnaryOp::cos, a); }
Expr exp(const Expr& a) { return Expr::unary(UnaryOp::exp, a); }
Expr log(const Expr& a) { return Expr::unary(UnaryOp::log, a); }
Expr sqrt(const Expr& a) { return Expr::unary(UnaryOp::sqrt, a); }
Expr pow(const Expr& base, int exponent) { return Expr::pow(base, exponent); }

Bindings Bindings::point(const Point4& x) {
  Bindings b;
  for (int i = 0; i < 4; ++i) b.set(static_cast<Variable>(i), x[i]);
  return b;
}

Bindings Bindings::time(double t) {
  Bindings b;
  b.set(Variable::t, t);
  return b;
}

Bindings& Bindings::set(Variable v, double value) {
  const int i = static_cast<int>(v);
  values_[i] = value;
  mask_ = static_cast<std::uint8_t>(mask_ | (1U << i));
  return *this;
}

std::optional<double> Bindings::get(Variable v) const {
  const int i = static_cast<int>(v);
  if ((mask_ >> i) & 1U) return values_[i];
  return std::nullopt;
}

}  // namespace qcr
