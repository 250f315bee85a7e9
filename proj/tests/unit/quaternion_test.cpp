#include "qcr/quaternion.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcr/errors.hpp"

namespace qcr {
namespace {

using testing::matrix_product;

TEST(QuaternionTest, BasisProducts) {
  EXPECT_EQ(hamilton_mul(Quaternion::i(), Quaternion::j()), Quaternion::k());
  EXPECT_EQ(hamilton_mul(Quaternion::j(), Quaternion::i()), -Quaternion::k());
  EXPECT_EQ(hamilton_mul(Quaternion::j(), Quaternion::k()), Quaternion::i());
  EXPECT_EQ(hamilton_mul(Quaternion::k(), Quaternion::i()), Quaternion::j());
  for (const auto& u : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
    EXPECT_EQ(hamilton_mul(u, u), -Quaternion::one());
  }
  const auto ijk = hamilton_mul(hamilton_mul(Quaternion::i(), Quaternion::j()),
                                Quaternion::k());
  EXPECT_EQ(ijk, -Quaternion::one());
}

TEST(QuaternionTest, IdentityIsNeutral) {
  const Quaternion q{1.5, -2.0, 0.25, 7.0};
  EXPECT_EQ(hamilton_mul(Quaternion::one(), q), q);
  EXPECT_EQ(hamilton_mul(q, Quaternion::one()), q);
}

TEST(QuaternionTest, ProductOfOnePlusIAndOnePlusJ) {
  const Quaternion p{1, 1, 0, 0};
  const Quaternion q{1, 0, 1, 0};
  const auto expected = matrix_product(p.to_array(), q.to_array());
  EXPECT_EQ(hamilton_mul(p, q).to_array(), expected);
  EXPECT_EQ(hamilton_mul(p, q), (Quaternion{1, 1, 1, 1}));
}

TEST(QuaternionTest, ConjugateNormInverse) {
  EXPECT_EQ(conjugate(Quaternion{1, 1, 1, 1}), (Quaternion{1, -1, -1, -1}));
  EXPECT_DOUBLE_EQ(norm(Quaternion{1, 1, 1, 1}), 2.0);
  EXPECT_EQ(inverse(Quaternion::i()), (Quaternion{0, -1, 0, 0}));
  const Quaternion q{0.5, -1, 2, 3};
  EXPECT_LE(max_abs_diff(hamilton_mul(q, inverse(q)), Quaternion::one()), 1e-15);
}

TEST(QuaternionTest, InverseOfZeroIsDomainError) {
  try {
    inverse(Quaternion{});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("inverse"), std::string::npos);
  }
}

class QuaternionPropertyTest : public ::testing::Test {
 protected:
  Quaternion random_quaternion() {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    return {u(rng_), u(rng_), u(rng_), u(rng_)};
  }
  std::mt19937_64 rng_{2024};
};

TEST_F(QuaternionPropertyTest, MatchesMatrixRepresentation) {
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_quaternion();
    const auto q = random_quaternion();
    const auto expected = matrix_product(p.to_array(), q.to_array());
    const auto got = hamilton_mul(p, q).to_array();
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(got[c], expected[c], 1e-12);
  }
}

TEST_F(QuaternionPropertyTest, Associativity) {
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_quaternion();
    const auto q = random_quaternion();
    const auto r = random_quaternion();
    const auto lhs = hamilton_mul(hamilton_mul(p, q), r);
    const auto rhs = hamilton_mul(p, hamilton_mul(q, r));
    EXPECT_LE(norm(lhs - rhs), 1e-10 * (1 + norm(p) * norm(q) * norm(r)));
  }
}

TEST_F(QuaternionPropertyTest, NormIsMultiplicative) {
  for (int n = 0; n < 1000; ++n) {
    const auto p = random_quaternion();
    const auto q = random_quaternion();
    const double expected = norm(p) * norm(q);
    EXPECT_NEAR(norm(hamilton_mul(p, q)), expected, 1e-12 * (1 + expected));
  }
}

TEST_F(QuaternionPropertyTest, ConjugateReversesProducts) {
  for (int n = 0; n < 200; ++n) {
    const auto p = random_quaternion();
    const auto q = random_quaternion();
    const auto lhs = conjugate(hamilton_mul(p, q));
    const auto rhs = hamilton_mul(conjugate(q), conjugate(p));
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
  }
}

}  // namespace
}  // namespace qcr
