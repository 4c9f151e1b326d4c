#include <gtest/gtest.h>

#include <random>

#include "lshape/conformal_map.hpp"
#include "lshape/corner_fold.hpp"
#include "lshape/errors.hpp"

using namespace lshape;

TEST(Fold, FixedPointAndCorner) {
  EXPECT_EQ(fold_closed_form(kEndpointAngle), kEndpointAngle);
  EXPECT_EQ(fold_closed_form(kPi), 0.0);
  EXPECT_EQ(fold_oracle(kEndpointAngle), kEndpointAngle);
  EXPECT_EQ(unfold(kEndpointAngle), kEndpointAngle);
  EXPECT_EQ(unfold(0.0), kPi);
}

TEST(Fold, KnownValueNearPi) {
  EXPECT_NEAR(fold_closed_form(32.0 * kPi / 33.0), 0.760171, 5e-7);
  EXPECT_NEAR(unfold(0.760171), 32.0 * kPi / 33.0, 1e-5);
}

TEST(Fold, AsymptoteNearPi) {
  const double u = 1e-3;
  EXPECT_NEAR(fold_closed_form(kPi - u), std::cbrt(4.0) * std::cbrt(u) + u / 3.0, 1e-4);
  // The small-u branch joins the closed form smoothly.
  const double a = fold_closed_form(kPi - 1.0000001e-6);
  const double b = fold_closed_form(kPi - 0.9999999e-6);
  EXPECT_NEAR(a, b, 1e-8);
  EXPECT_NEAR(fold_oracle(kPi - 0.5e-6), fold_closed_form(kPi - 0.5e-6), 1e-12);
}

TEST(Fold, ClosedFormAgreesWithOracle) {
  for (int i = 0; i <= 10000; ++i) {
    const double t = kEndpointAngle + (kPi - kEndpointAngle) * i / 10000.0;
    ASSERT_NEAR(fold_closed_form(t), fold_oracle(t), 1e-10) << "t = " << t;
  }
}

TEST(Fold, MidpointIsMonotoneConsistent) {
  const double t = 5.0 * kPi / 6.0;
  const double j = fold_oracle(t);
  EXPECT_GT(j, 0.0);
  EXPECT_LT(j, kEndpointAngle);
  EXPECT_GT(fold_oracle(t - 1e-3), j);
  EXPECT_LT(fold_oracle(t + 1e-3), j);
}

TEST(Fold, DomainErrors) {
  EXPECT_THROW((void)fold_closed_form(1.0), DomainError);
  EXPECT_THROW((void)fold_closed_form(3.2), DomainError);
  EXPECT_THROW((void)fold_oracle(0.0), DomainError);
  EXPECT_THROW((void)unfold(2.5), DomainError);
  EXPECT_THROW((void)unfold(-0.1), DomainError);
  EXPECT_THROW((void)fold_prime(kPi), SingularityError);
  EXPECT_EQ(fold_prime(kEndpointAngle), -1.0);
}

TEST(FoldPrime, MatchesFiniteDifference) {
  const double t = 0.9 * kPi;
  const double h = 1e-6;
  const double fd = (fold_closed_form(t + h) - fold_closed_form(t - h)) / (2.0 * h);
  EXPECT_NEAR(fold_prime(t), fd, 1e-5 * std::abs(fd));
}

TEST(FoldPrime, AsymptoteNearPi) {
  const double u = 1e-6;
  const double want = -std::cbrt(4.0) / 3.0 * std::pow(u, -2.0 / 3.0);
  EXPECT_NEAR(fold_prime(kPi - u) / want, 1.0, 1e-3);
}

TEST(FoldProperty, InvariantsOnRandomAngles) {
  std::mt19937 rng(201);
  std::uniform_real_distribution<double> dist(kEndpointAngle, kPi);
  for (int i = 0; i < 5000; ++i) {
    const double t1 = dist(rng);
    const double t2 = dist(rng);
    const double j1 = fold_closed_form(t1);
    const double j2 = fold_closed_form(t2);
    EXPECT_LT(std::abs(fold_residual(t1, j1)), 1e-12);
    EXPECT_EQ(fold_closed_form(-t1), -j1);
    if (t1 < t2) EXPECT_GT(j1, j2);
    if (t1 > kEndpointAngle + 1e-3 && t1 < kPi - 1e-3) EXPECT_LT(fold_prime(t1), -1.0);
    EXPECT_NEAR(unfold(j1), t1, 1e-10);
    if (t1 >= kEndpointAngle + 1e-6) {
      EXPECT_LT(std::abs(boundary_point(t1) - boundary_point(j1)), 1e-10);
    }
  }
}

TEST(FoldAngle, PassesThroughShortSide) {
  EXPECT_EQ(fold_angle(0.3), 0.3);
  EXPECT_EQ(fold_angle(-kEndpointAngle), -kEndpointAngle);
  EXPECT_NEAR(fold_angle(-32.0 * kPi / 33.0), -0.760171, 5e-7);
  const FoldValue v = evaluate_fold(2.5);
  EXPECT_EQ(v.j, fold_closed_form(2.5));
  EXPECT_EQ(v.derivative, fold_prime(2.5));
}
