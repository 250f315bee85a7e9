#include <gtest/gtest.h>

#include <cmath>

#include "qcr/errors.hpp"
#include "qcr/expr.hpp"
#include "qcr/finite_difference.hpp"
#include "qcr/sampling.hpp"
#include "random_expr.hpp"

namespace qcr {
namespace {

std::string d(const std::string& s, Variable v) {
  return to_string(differentiate(parse(s), v));
}

TEST(DifferentiateTest, Basics) {
  EXPECT_EQ(d("x1^2 - x2^2", Variable::x1), "2*x1");
  EXPECT_EQ(d("sin(x3)", Variable::x3), "cos(x3)");
  EXPECT_EQ(d("2*x1*x2", Variable::x2), "2*x1");
  EXPECT_EQ(d("x1^2 - x2^2", Variable::x2), "0 - 2*x2");
  EXPECT_EQ(d("exp(x4)", Variable::x4), "exp(x4)");
  EXPECT_EQ(d("x1 + x2", Variable::x3), "0");
  EXPECT_EQ(d("t^3", Variable::t), "3*t^2");
}

TEST(DifferentiateTest, MatchesFiniteDifferencesOnRandomTrees) {
  testing::RandomExpr gen(11, true);
  Sampler sampler(12);
  int compared = 0;
  for (int n = 0; n < 100; ++n) {
    const Expr e = gen(5);
    const int axis = 1 + n % 4;
    const Expr de = differentiate(e, axis_variable(axis));
    for (int k = 0; k < 10; ++k) {
      const Point4 p = sampler.point(kSampleLo, kSampleHi);
      double exact = 0.0;
      double approx = 0.0;
      try {
        exact = evaluate(de, p);
        approx = partial1_fd(e, p, axis);
      } catch (const DomainError&) {
        continue;
      }
      const double scale = std::max({1.0, std::abs(exact), std::abs(evaluate(e, p))});
      EXPECT_LE(std::abs(exact - approx), 1e-6 * scale) << to_string(e);
      ++compared;
    }
  }
  EXPECT_GT(compared, 900);
}

TEST(SimplifyTest, Identities) {
  EXPECT_EQ(to_string(simplify(parse("0*x1 + x2^1"))), "x2");
  EXPECT_EQ(to_string(simplify(parse("2*3"))), "6");
  EXPECT_EQ(to_string(simplify(parse("x1 - x1"))), "x1 - x1");
  EXPECT_EQ(to_string(simplify(parse("--x3"))), "x3");
  EXPECT_EQ(to_string(simplify(parse("x1/1 + 0"))), "x1");
  EXPECT_EQ(to_string(simplify(parse("x2^0 * x4"))), "x4");
  EXPECT_EQ(to_string(simplify(parse("2^3 - x1"))), "8 - x1");
  EXPECT_EQ(to_string(simplify(parse("x3 - 0"))), "x3");
}

TEST(SimplifyTest, LeavesUndefinedConstantsAlone) {
  EXPECT_EQ(to_string(simplify(parse("log(0 - 1)"))), "log(-1)");
  EXPECT_EQ(to_string(simplify(parse("sqrt(2 - 3)"))), "sqrt(-1)");
  EXPECT_EQ(to_string(simplify(parse("1/0"))), "1/0");
}

TEST(SimplifyTest, PreservesValue) {
  testing::RandomExpr gen(13, false);
  Sampler sampler(14);
  for (int n = 0; n < 300; ++n) {
    const Expr e = gen(5);
    const Expr s = simplify(e);
    for (int k = 0; k < 5; ++k) {
      const Point4 p = sampler.point(kSampleLo, kSampleHi);
      double before = 0.0;
      try {
        before = evaluate(e, p);
      } catch (const DomainError&) {
        continue;
      }
      const double after = evaluate(s, p);
      EXPECT_LE(std::abs(before - after), 1e-12 * std::max(1.0, std::abs(before)))
          << to_string(e) << " -> " << to_string(s);
    }
  }
}

TEST(SimplifyTest, IsIdempotent) {
  testing::RandomExpr gen(15, false);
  for (int n = 0; n < 300; ++n) {
    const Expr s = simplify(gen(5));
    EXPECT_EQ(simplify(s), s);
  }
}

}  // namespace
}  // namespace qcr
