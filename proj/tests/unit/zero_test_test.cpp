#include <gtest/gtest.h>

#include "qcr/errors.hpp"
#include "qcr/expr.hpp"
#include "random_expr.hpp"

namespace qcr {
namespace {

bool zero(const std::string& s) { return is_identically_zero(parse(s), 32, 1e-9, 42); }

TEST(ZeroTest, Identities) {
  EXPECT_TRUE(zero("x1 - x1"));
  EXPECT_FALSE(zero("x1"));
  EXPECT_TRUE(zero("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2"));
  EXPECT_TRUE(zero("sin(x3)^2 + cos(x3)^2 - 1"));
  EXPECT_FALSE(zero("x1*x2*x3*x4 - 1e-3"));
}

TEST(ZeroTest, ReportsWitness) {
  const auto r = zero_test(parse("x1^2"), 32, 1e-9, 42);
  EXPECT_FALSE(r.zero);
  EXPECT_EQ(r.points_evaluated, 32);
  EXPECT_DOUBLE_EQ(r.max_abs, r.worst_point[0] * r.worst_point[0]);
}

TEST(ZeroTest, SchwartzOnPolynomial) {
  const Expr e = parse("x1^2*x2");
  const Expr d12 = differentiate(differentiate(e, Variable::x2), Variable::x1);
  const Expr d21 = differentiate(differentiate(e, Variable::x1), Variable::x2);
  EXPECT_TRUE(is_identically_zero(d12 - d21, 32, 1e-9, 42));
}

TEST(ZeroTest, MixedPartialsCommuteForRandomPolynomials) {
  testing::RandomExpr gen(21, true);
  int polynomials = 0;
  for (int n = 0; n < 200 && polynomials < 40; ++n) {
    const Expr e = gen(4);
    if (to_string(e).find_first_of("sc") != std::string::npos) continue;
    ++polynomials;
    for (int m = 1; m <= 4; ++m) {
      for (int k = m + 1; k <= 4; ++k) {
        const Expr dmk = differentiate(differentiate(e, axis_variable(k)), axis_variable(m));
        const Expr dkm = differentiate(differentiate(e, axis_variable(m)), axis_variable(k));
        EXPECT_TRUE(is_identically_zero(dmk - dkm, 32, 1e-9, 42)) << to_string(e);
      }
    }
  }
  EXPECT_GE(polynomials, 20);
}

TEST(ZeroTest, RetriesDomainErrorsThenGivesUp) {
  const auto r = zero_test(parse("log(x1) - log(x1)"), 32, 1e-9, 42);
  EXPECT_TRUE(r.zero);
  EXPECT_GT(r.points_skipped, 0);
  EXPECT_THROW(zero_test(parse("sqrt(0 - 1 - x1^2)"), 32, 1e-9, 42),
               InconclusiveError);
}

}  // namespace
}  // namespace qcr
