#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lshape/errors.hpp"
#include "lshape/nodal_poly.hpp"

using namespace lshape;

namespace {

double direct_product(const std::vector<Complex>& nodes, Complex z) {
  double p = 1.0;
  for (const auto& zk : nodes) p *= std::abs(z - zk);
  return p;
}

}  // namespace

TEST(LogOmega, MatchesDirectProduct) {
  const NodeFamily f = build_raw(8);
  const Complex z(1.0, 1.0);
  const double d = direct_product(f.points, z);
  EXPECT_NEAR(log_abs_omega(f, z).magnitude(), d, 1e-10 * d);
}

TEST(LogOmega, ZeroAtNodes) {
  const NodeFamily f = build_raw(8);
  EXPECT_TRUE(log_abs_omega(f, f.points[3]).is_zero());
  EXPECT_EQ(log_abs_omega(f, f.points[3]).magnitude(), 0.0);
}

TEST(LogOmegaProperty, OracleForSmallDegrees) {
  std::mt19937 rng(401);
  std::uniform_real_distribution<double> c(-2.5, 2.5);
  for (int n = 0; n <= 24; ++n) {
    for (const FamilyKind kind : {FamilyKind::kRaw, FamilyKind::kAdjusted}) {
      const NodeFamily f = build_family(n, kind);
      for (int i = 0; i < 100; ++i) {
        const Complex z(c(rng), c(rng));
        const double d = direct_product(f.points, z);
        EXPECT_NEAR(log_abs_omega(f, z).magnitude(), d, 1e-10 * d) << "n = " << n;
      }
    }
  }
}

TEST(LogOmega, SurvivesHugeDegrees) {
  // 20000 factors of size ~10 overflow a double; the log form does not.
  std::vector<Complex> nodes(20000, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = Complex(1e-3 * static_cast<double>(i), 0.0);
  const LogMagnitude v = log_abs_omega(nodes, Complex(0.0, 10.0));
  EXPECT_TRUE(std::isfinite(v.value));
  EXPECT_GT(v.value, 700.0);
}

TEST(DerivativeTable, TwoNodes) {
  const NodeFamily f = build_raw(1);
  const DerivativeTable t = build_derivative_table(f);
  const double want = std::log(std::abs(f.points[0] - f.points[1]));
  EXPECT_NEAR(t.logs[0], want, 1e-15);
  EXPECT_NEAR(t.logs[1], want, 1e-15);
}

TEST(DerivativeTable, MatchesDirectProducts) {
  const NodeFamily f = build_raw(8);
  const DerivativeTable t = build_derivative_table(f);
  for (int k = 0; k <= 8; ++k) {
    double d = 1.0;
    for (int j = 0; j <= 8; ++j) {
      if (j != k) d *= std::abs(f.points[k] - f.points[j]);
    }
    EXPECT_NEAR(std::exp(t.logs[k]), d, 1e-10 * d);
  }
}

TEST(DerivativeTable, DuplicateNodesAreNamed) {
  const std::vector<Complex> nodes{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  try {
    (void)build_derivative_table(nodes);
    FAIL() << "expected DuplicateNodeError";
  } catch (const DuplicateNodeError& e) {
    EXPECT_EQ(e.first(), 0);
    EXPECT_EQ(e.second(), 2);
  }
}

TEST(DerivativeTable, BitwiseReproducible) {
  const NodeFamily f = build_adjusted(300);
  EXPECT_EQ(build_derivative_table(f).logs, build_derivative_table(f).logs);
}

TEST(DerivativeTable, RawCollisionShowsUp) {
  const NodeFamily f = build_raw(32);
  const DerivativeTable t = build_derivative_table(f);
  const double tiny = std::log(std::abs(f.points[16] - f.points[4]));
  EXPECT_LT(tiny, std::log(0.01));
  EXPECT_LT(t.logs[16], *std::max_element(t.logs.begin(), t.logs.end()) - 2.0);
}

TEST(LebesgueFunction, CardinalityAndLowerBound) {
  for (const int n : {0, 1, 7, 32}) {
    const NodeFamily f = build_adjusted(n);
    const DerivativeTable t = build_derivative_table(f);
    for (const auto& z : f.points) EXPECT_EQ(lebesgue_function(f, t, z), 1.0);
    for (int i = 0; i <= 1000; ++i) {
      const double s = -kEndpointAngle + 2 * kEndpointAngle * i / 1000.0;
      EXPECT_GE(lebesgue_function(f, t, boundary_point(s)), 1.0 - 1e-10);
    }
  }
}

TEST(LogBasis, CardinalAtNodes) {
  const NodeFamily f = build_adjusted(20);
  const DerivativeTable t = build_derivative_table(f);
  for (std::size_t k = 0; k < f.points.size(); ++k) {
    EXPECT_NEAR(log_abs_basis(f.points, t, k, f.points[k]).value, 0.0, 1e-12);
    EXPECT_TRUE(log_abs_basis(f.points, t, k, f.points[(k + 1) % f.points.size()]).is_zero());
  }
}

TEST(NodalProperty, OrderIndependence) {
  std::mt19937 rng(402);
  const NodeFamily f = build_raw(50);
  std::vector<Complex> shuffled = f.points;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const DerivativeTable a = build_derivative_table(f.points);
  const DerivativeTable b = build_derivative_table(shuffled);
  std::uniform_real_distribution<double> td(-kEndpointAngle, kEndpointAngle);
  for (int i = 0; i < 300; ++i) {
    const Complex z = boundary_point(td(rng));
    const double x = lebesgue_function(f.points, a, z);
    const double y = lebesgue_function(shuffled, b, z);
    EXPECT_NEAR(x, y, 1e-12 * x);
    EXPECT_NEAR(log_abs_omega(f.points, z).value, log_abs_omega(shuffled, z).value, 1e-12);
  }
}

TEST(LevelProduct, StaysInsideTheContainmentInterval) {
  const double lo = std::exp(-3.0) * std::pow(std::exp(1.0) - 1.0, 2);
  const double hi = std::exp(5.0) * (1.0 + 2.0 * std::exp(1.0)) / (std::exp(1.0) - 1.0);
  EXPECT_NEAR(lo, 0.1469, 1e-4);
  EXPECT_NEAR(hi, 555.97, 5e-2);
  const LevelNodes ln = build_level_nodes(64, RhoConvention::kOneOverN);
  for (int i = 0; i < 1000; ++i) {
    const double t = -kEndpointAngle + 2 * kEndpointAngle * (i + 0.5) / 1000.0;
    const double v = log_abs_omega(ln, boundary_point(t)).magnitude();
    EXPECT_GE(v, lo);
    EXPECT_LE(v, hi);
  }
}

TEST(Surrogate, ZeroAtNodesAndSymmetric) {
  const int n = 256;
  const NodeFamily raw = build_raw(n);
  const LevelNodes ln = build_level_nodes(n, RhoConvention::kOneOverN);
  EXPECT_EQ(asymptotic_omega_estimate(raw, ln, raw.angles[5]), 0.0);
  const double mid = 0.5 * (raw.angles[0] + raw.angles[1]);
  const double est = asymptotic_omega_estimate(raw, ln, mid);
  const double actual = log_abs_omega(raw, boundary_point(mid)).magnitude();
  EXPECT_GT(actual / est, 1e-2);
  EXPECT_LT(actual / est, 1e2);
  for (const double t : {0.1, 0.7, 1.9}) {
    EXPECT_NEAR(asymptotic_omega_estimate(raw, ln, t), asymptotic_omega_estimate(raw, ln, -t), 1e-12);
  }
  EXPECT_THROW((void)asymptotic_omega_estimate(raw, build_level_nodes(8), 0.1), DomainError);
}
