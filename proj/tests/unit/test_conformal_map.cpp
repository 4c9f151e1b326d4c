#include <gtest/gtest.h>

#include <random>

#include "lshape/conformal_map.hpp"
#include "lshape/errors.hpp"

using namespace lshape;

namespace {

Complex random_exterior(std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> r(lo, hi);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  return std::polar(r(rng), a(rng));
}

}  // namespace

TEST(Psi, EndpointIdentity) {
  const Complex want = std::polar(kSegmentLength, 0.75 * kPi);
  EXPECT_LT(std::abs(psi(std::polar(1.0, kEndpointAngle)) - want), 1e-12);
  EXPECT_LT(std::abs(psi(std::polar(1.0, -kEndpointAngle)) - std::conj(want)), 1e-12);
  EXPECT_NEAR(want.real(), -1.611855, 1e-6);
  EXPECT_NEAR(want.imag(), 1.611855, 1e-6);
}

TEST(Psi, ReflectedFormMissesTheEndpoint) {
  const Complex want = std::polar(kSegmentLength, 0.75 * kPi);
  EXPECT_GT(std::abs(psi_reflected(std::polar(1.0, kEndpointAngle)) - want), 1.0);
}

TEST(Psi, CornerPreimages) {
  EXPECT_EQ(psi(Complex(1.0, 0.0)), Complex(0.0, 0.0));
  EXPECT_EQ(psi(Complex(-1.0, 0.0)), Complex(0.0, 0.0));
}

TEST(Psi, QuarterTurn) {
  const Complex v = psi(Complex(0.0, 1.0));
  EXPECT_NEAR(v.real(), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(v.imag(), std::sqrt(2.0), 1e-14);
}

TEST(Psi, BehavesLikeIdentityAtInfinity) {
  EXPECT_LT(std::abs(psi(Complex(1000.0, 0.0)) - Complex(999.0, 0.0)), 1e-3);
  EXPECT_LT(std::abs(psi_prime(Complex(1000.0, 0.0)) - 1.0), 1e-3);
}

TEST(Psi, DomainErrors) {
  EXPECT_THROW((void)psi(Complex(0.0, 0.0)), DomainError);
  EXPECT_THROW((void)psi(Complex(0.5, 0.0)), DomainError);
  EXPECT_THROW((void)psi(Complex(NAN, 0.0)), DomainError);
  EXPECT_THROW((void)psi_prime(Complex(-1.0, 0.0)), SingularityError);
}

TEST(Psi, MagnitudeLawOnUnitCircle) {
  for (int i = 0; i < 512; ++i) {
    const double t = kPi * i / 511.0;
    const double rhs = 8.0 * std::sin(t) * std::pow(std::sin(0.5 * t), 2);
    EXPECT_NEAR(std::norm(psi(std::polar(1.0, t))), rhs, 1e-12) << "t = " << t;
    EXPECT_NEAR(std::norm(boundary_point(t)), rhs, 1e-12) << "t = " << t;
  }
}

TEST(Psi, BoundaryPointMatchesGeneralFormula) {
  for (int i = -500; i <= 500; ++i) {
    const double t = kPi * i / 500.0;
    EXPECT_LT(std::abs(boundary_point(t) - psi(std::polar(1.0, t))), 1e-7) << "t = " << t;
  }
  EXPECT_NEAR(std::abs(boundary_point(kEndpointAngle)), kSegmentLength, 1e-14);
  EXPECT_NEAR(std::abs(boundary_point(0.5 * kPi)), 2.0, 1e-14);
  EXPECT_EQ(boundary_point(0.0), Complex(0.0, 0.0));
  EXPECT_EQ(boundary_point(kPi), Complex(0.0, 0.0));
}

TEST(PsiProperty, ConjugateSymmetry) {
  std::mt19937 rng(101);
  for (int i = 0; i < 500; ++i) {
    const Complex w = random_exterior(rng, 1.0, 5.0);
    EXPECT_LT(std::abs(psi(std::conj(w)) - std::conj(psi(w))), 1e-13);
  }
}

TEST(PsiProperty, DerivativeMatchesFiniteDifferences) {
  std::mt19937 rng(102);
  int done = 0;
  while (done < 100) {
    const Complex w = random_exterior(rng, 1.01, 3.0);
    if (std::abs(w + 1.0) <= 0.1) continue;
    const double h = 1e-6;
    const Complex fd = (psi(w + h) - psi(w - h)) / (2.0 * h);
    EXPECT_LT(std::abs(fd - psi_prime(w)) / std::abs(psi_prime(w)), 1e-6) << w;
    ++done;
  }
  EXPECT_LT(std::abs(psi_prime(std::polar(1.0, kEndpointAngle))), 1e-14);
}

TEST(PsiProperty, ExteriorMapsOffTheArc) {
  std::mt19937 rng(103);
  for (int i = 0; i < 500; ++i) {
    const Complex w = random_exterior(rng, 1.05, 4.0);
    const Complex z = psi(w);
    // Off the two rays, or farther out than the segment length.
    const double along_upper = std::abs(std::arg(z) - 0.75 * kPi);
    const double along_lower = std::abs(std::arg(z) + 0.75 * kPi);
    const bool on_arc = (along_upper < 1e-9 || along_lower < 1e-9) && std::abs(z) <= kSegmentLength;
    EXPECT_FALSE(on_arc) << w;
  }
}

TEST(ArcPoint, EndpointsAndLength) {
  EXPECT_LT(std::abs(arc_point({Branch::kUpper, 1.0}) - psi(std::polar(1.0, kEndpointAngle))), 1e-12);
  EXPECT_LT(std::abs(arc_point({Branch::kLower, 1.0}) - psi(std::polar(1.0, -kEndpointAngle))), 1e-12);
  EXPECT_EQ(arc_point({Branch::kUpper, 0.0}), Complex(0.0, 0.0));
  EXPECT_NEAR(arc_length(), 4.559014, 1e-6);
  EXPECT_DOUBLE_EQ(arc_measure_weight(), kSegmentLength);
  EXPECT_THROW((void)arc_point({Branch::kUpper, 1.5}), DomainError);
  EXPECT_THROW((void)arc_point({Branch::kLower, -0.1}), DomainError);
}

TEST(LevelCurve, Conventions) {
  EXPECT_DOUBLE_EQ(LevelCurve::make(8, RhoConvention::kOneOverN).rho, 1.125);
  EXPECT_DOUBLE_EQ(LevelCurve::make(8, RhoConvention::kOneOverNPlusOne).rho, 1.0 + 1.0 / 9.0);
  EXPECT_THROW((void)LevelCurve::make(0, RhoConvention::kOneOverN), DomainError);
  EXPECT_THROW((void)LevelCurve::make(-1), DomainError);
}

TEST(LevelCurve, PointsAndLimit) {
  const auto c = LevelCurve::make(8);
  EXPECT_EQ(level_point(c, 0.0), psi(Complex(10.0 / 9.0, 0.0)));
  LevelCurve close{1000000, 1.0 + 1e-9, RhoConvention::kOneOverNPlusOne};
  for (const double t : {-2.5, -1.0, 0.3, 2.0, 3.0}) {
    EXPECT_LT(std::abs(level_point(close, t) - boundary_point(t)), 1e-4);
  }
}

TEST(LevelCurve, MaximumModulusOnEndpointLobes) {
  const auto c = LevelCurve::make(16);
  double best = 0.0;
  double best_t = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = -kPi + kTwoPi * i / 20000.0;
    const double v = std::abs(level_point(c, t));
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  // |psi(rho e^{it})| peaks on the endpoint lobes, not at the corner preimages.
  EXPECT_GT(std::abs(level_point(c, kPi)), 0.0);
  EXPECT_GT(best, std::abs(level_point(c, kPi)));
  EXPECT_NEAR(std::abs(best_t), kEndpointAngle, 0.2);
}

TEST(DistToLevel, CornerIsStrictlyOutside) {
  const auto c = LevelCurve::make(32);
  const double seeds[] = {0.0, kPi};
  EXPECT_GT(dist_to_level(Complex(0.0, 0.0), c, seeds), 0.0);
}

TEST(DistToLevel, NoWorseThanTheSeed) {
  const auto c = LevelCurve::make(64);
  const Complex end = boundary_point(kEndpointAngle);
  const double seeds[] = {kEndpointAngle};
  EXPECT_LT(dist_to_level(end, c, seeds), std::abs(level_point(c, kEndpointAngle) - end));
}

TEST(DistToLevel, MatchesBruteForce) {
  const auto c = LevelCurve::make(256);
  const Complex z = boundary_point(kPi / 3.0);
  double brute = 1e300;
  double at = 0.0;
  const double h = kTwoPi / 100000.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = std::abs(z - level_point(c, -kPi + h * i));
    if (v < brute) {
      brute = v;
      at = -kPi + h * i;
    }
  }
  for (int i = -10000; i <= 10000; ++i) {
    brute = std::min(brute, std::abs(z - level_point(c, at + h * i / 10000.0)));
  }
  const double seeds[] = {kPi / 3.0, 2.9};
  const double d = dist_to_level(z, c, seeds);
  EXPECT_LE(d, brute * (1.0 + 1e-12));
  EXPECT_NEAR(d, brute, 1e-6 * brute);
  EXPECT_THROW((void)dist_to_level(z, c, std::span<const double>{}), DomainError);
}
