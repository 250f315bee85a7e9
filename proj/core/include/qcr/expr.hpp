#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace qcr {

using Point4 = std::array<double, 4>;

enum class Variable : std::uint8_t { x1 = 0, x2 = 1, x3 = 2, x4 = 3, t = 4 };

inline constexpr std::array<Variable, 4> kSpatialVariables = {
    Variable::x1, Variable::x2, Variable::x3, Variable::x4};

std::string_view variable_name(Variable v);
// Variable for axis 1..4.
Variable axis_variable(int axis);

enum class UnaryOp : std::uint8_t { neg, sin, cos, exp, log, sqrt };
enum class BinaryOp : std::uint8_t { add, sub, mul, div };

struct ExprNode;

// Immutable expression tree. Copies share structure; nodes are never
// modified after construction, so an Expr may be read from any thread.
class Expr {
 public:
  // Literal zero.
  Expr();

  static Expr literal(double value);
  static Expr variable(Variable v);
  static Expr unary(UnaryOp op, Expr arg);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, int exponent);

  const ExprNode& node() const { return *node_; }

  bool is_literal() const;
  std::optional<double> literal_value() const;
  bool is_literal(double value) const;

  // Bit n set iff Variable(n) occurs in the tree.
  std::uint8_t variable_mask() const;
  bool uses(Variable v) const {
    return (variable_mask() >> static_cast<int>(v)) & 1U;
  }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node);
  std::shared_ptr<const ExprNode> node_;
};

struct LiteralNode {
  double value;
};
struct VariableNode {
  Variable var;
};
struct UnaryNode {
  UnaryOp op;
  Expr arg;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct PowNode {
  Expr base;
  int exponent;
};

struct ExprNode {
  std::variant<LiteralNode, VariableNode, UnaryNode, BinaryNode, PowNode> v;
  std::uint8_t variable_mask = 0;
};

// Unsimplified tree builders.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);
Expr pow(const Expr& base, int exponent);

// Grammar (EBNF):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')* power
//   power  := atom ('^' int)?
//   atom   := number | ident | func '(' expr ')' | '(' expr ')'
// with func in {sin,cos,exp,log,sqrt} and ident in {x1,x2,x3,x4,t,pi,e}.
// Throws ParseError / UnknownIdentifierError.
Expr parse(std::string_view text);

// Prints with the minimal parentheses needed for parse() to rebuild the same
// tree. Literals use the shortest round-trip decimal form.
std::string to_string(const Expr& e);

// Variable values for evaluation. Unset variables raise MissingVariableError
// when referenced.
class Bindings {
 public:
  Bindings() = default;
  static Bindings point(const Point4& x);
  static Bindings time(double t);

  Bindings& set(Variable v, double value);
  std::optional<double> get(Variable v) const;

 private:
  std::array<double, 5> values_{};
  std::uint8_t mask_ = 0;
};

// Throws DomainError (log/sqrt outside their domain, division by zero, any
// non-finite intermediate) and MissingVariableError.
double evaluate(const Expr& e, const Bindings& b);
double evaluate(const Expr& e, const Point4& x);
// A span of 4 binds x1..x4; a span of 1 binds t.
double evaluate(const Expr& e, std::span<const double> point);

// As evaluate(); also reports the largest |value| over every proper
// subexpression of e.
double evaluate_tracked(const Expr& e, const Bindings& b, double& max_sub_abs);

// Exact symbolic partial derivative, simplified before return.
Expr differentiate(const Expr& e, Variable v);

// Closed rewrite set applied to a fixed point: constant folding, additive and
// multiplicative identities, x*0, x/1, x^0, x^1, double negation, and
// folding of literal powers. No cancellation, ordering or expansion.
Expr simplify(const Expr& e);

struct ZeroTestResult {
  bool zero = true;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  Point4 worst_point{};
  int points_evaluated = 0;
  int points_skipped = 0;
};

// Randomised identity test: evaluates e at `trials` seeded points in
// [-2,2]^4 (plus t in [-2,2]) and checks |e| <= tol * (1 + scale) at each.
// Points that hit a domain error are redrawn, up to 10 times per trial;
// if a trial exhausts its retries InconclusiveError is thrown.
ZeroTestResult zero_test(const Expr& e, int trials, double tol,
                         std::uint64_t seed);
bool is_identically_zero(const Expr& e, int trials, double tol,
                         std::uint64_t seed);

// Quaternion-valued function of (x1..x4): F1 + F2 i + F3 j + F4 k.
struct QuatFunction {
  std::array<Expr, 4> components;

  const Expr& operator[](int m) const { return components[m]; }
};

}  // namespace qcr
