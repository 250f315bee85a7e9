#include "qcr/finite_difference.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qcr/errors.hpp"
#include "qcr/sampling.hpp"

namespace qcr {
namespace {

TEST(FiniteDifferenceTest, FirstOrder) {
  EXPECT_NEAR(partial1_fd(parse("x1^2"), {3, 0, 0, 0}, 1), 6.0, 1e-6);
  EXPECT_NEAR(partial1_fd(parse("7"), {0.3, 1, 2, 3}, 2), 0.0, 1e-9);
  EXPECT_NEAR(partial1_fd(parse("2*x1*x2"), {1, 2, 0, 0}, 2), 2.0, 1e-6);
}

TEST(FiniteDifferenceTest, SecondOrder) {
  for (const Point4 p : {Point4{0, 0, 0, 0}, Point4{-1.5, 2, 0.3, 7}}) {
    EXPECT_NEAR(partial2_fd(parse("x1^2"), p, 1, 1), 2.0, 1e-4);
    EXPECT_NEAR(partial2_fd(parse("x1*x2"), p, 1, 2), 1.0, 1e-4);
  }
  const Point4 p{1, 1, 1, 1};
  const Expr h = parse("x1^2 - x2^2");
  EXPECT_NEAR(partial2_fd(h, p, 1, 1) + partial2_fd(h, p, 2, 2), 0.0, 1e-3);
}

// No truncation error on quadratics, so only rounding remains: about
// eps * |f| / h^2, which is 1e-7 at the default step and 1e-11 at h = 1e-2.
TEST(FiniteDifferenceTest, PureStencilExactOnQuadratics) {
  const Expr q = parse("3*x1^2 - 2*x1*x2 + 0.5*x3^2 + x4 - 4");
  FDSettings wide;
  wide.h2 = 1e-2;
  Sampler sampler(3);
  for (int n = 0; n < 100; ++n) {
    const Point4 p = sampler.point(kSampleLo, kSampleHi);
    EXPECT_NEAR(partial2_fd(q, p, 1, 1, wide), 6.0, 1e-8);
    EXPECT_NEAR(partial2_fd(q, p, 3, 3, wide), 1.0, 1e-8);
    EXPECT_NEAR(partial2_fd(q, p, 4, 4, wide), 0.0, 1e-8);
    const double rounding = 8 * 2.3e-16 * (1 + std::abs(evaluate(q, p))) /
                            (1.2e-4 * 1.2e-4);
    EXPECT_NEAR(partial2_fd(q, p, 1, 1), 6.0, rounding);
    EXPECT_NEAR(partial2_fd(q, p, 4, 4), 0.0, rounding);
  }
}

TEST(FiniteDifferenceTest, MixedPartialSymmetry) {
  const Expr f = parse("exp(x1)*sin(x2*x3) + x4^3*x1");
  Sampler sampler(4);
  for (int n = 0; n < 100; ++n) {
    const Point4 p = sampler.point(kSampleLo, kSampleHi);
    const double scale = 1.0 + std::abs(evaluate(f, p));
    for (int m = 1; m <= 4; ++m) {
      for (int k = m + 1; k <= 4; ++k) {
        EXPECT_LE(std::abs(partial2_fd(f, p, m, k) - partial2_fd(f, p, k, m)),
                  1e-4 * scale);
      }
    }
  }
}

TEST(FiniteDifferenceTest, AcceptsCallables) {
  auto f = [](const Point4& p) { return p[2] * p[2] * p[2]; };
  EXPECT_NEAR(partial1_fd(f, {0, 0, 2, 0}, 3), 12.0, 1e-6);
}

TEST(FiniteDifferenceTest, RejectsBadSettings) {
  EXPECT_THROW(partial1_fd(parse("x1"), {}, 5), PreconditionError);
  FDSettings s;
  s.h1 = 0.0;
  EXPECT_THROW(s.validate(), PreconditionError);
}

}  // namespace
}  // namespace qcr
