#include <charconv>
#include <cmath>
#include <string>

#include "qcr/expr.hpp"

namespace qcr {
namespace {

// Binding strength of the construct that prints a node; an operand printed
// where a stronger one is required gets parentheses.
enum Prec : int { kSum = 1, kProduct = 2, kFactor = 3, kPower = 4, kAtom = 5 };

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

std::string_view unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::exp: return "exp";
    case UnaryOp::log: return "log";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::neg: return "-";
  }
  return "?";
}

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode>) {
          return std::signbit(n.value) ? kFactor : kAtom;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return kAtom;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return n.op == UnaryOp::neg ? kFactor : kAtom;
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return (n.op == BinaryOp::add || n.op == BinaryOp::sub) ? kSum
                                                                   : kProduct;
        } else {
          return kPower;
        }
      },
      e.node().v);
}

void print(const Expr& e, int min_prec, std::string& out);

void print_node(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode>) {
          if (std::signbit(n.value)) {
            out += '-';
            out += format_number(-n.value);
          } else {
            out += format_number(n.value);
          }
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          out += variable_name(n.var);
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          if (n.op == UnaryOp::neg) {
            out += '-';
            print(n.arg, kFactor, out);
          } else {
            out += unary_name(n.op);
            out += '(';
            print(n.arg, 0, out);
            out += ')';
          }
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          switch (n.op) {
            case BinaryOp::add:
            case BinaryOp::sub:
              print(n.lhs, kSum, out);
              out += n.op == BinaryOp::add ? " + " : " - ";
              print(n.rhs, kProduct, out);
              break;
            case BinaryOp::mul:
            case BinaryOp::div:
              print(n.lhs, kProduct, out);
              out += n.op == BinaryOp::mul ? '*' : '/';
              print(n.rhs, kFactor, out);
              break;
          }
        } else {
          print(n.base, kAtom, out);
          out += '^';
          out += std::to_string(n.exponent);
        }
      },
      e.node().v);
}

void print(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print_node(e, out);
    out += ')';
  } else {
    print_node(e, out);
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

}  // namespace qcr
