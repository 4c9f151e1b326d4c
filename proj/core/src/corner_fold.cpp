#include "lshape/corner_fold.hpp"

#include <algorithm>
#include <cmath>

#include "lshape/errors.hpp"
#include "lshape/numeric.hpp"

namespace lshape {
namespace {

// Angles are parameterised by a = sin^2(j/2) on the short side and
// c = sin^2((pi - t)/2) on the long side. With g(x) = sin x sin^2(x/2) one has
// g^2 = 4 a^3 (1 - a), and after removing the trivial root a = 1 - c the
// defining relation g(j) = g(t) becomes
//
//   D(a, c) = c (1 - c)^2 + a c (1 - c) + a^2 c - a^3 = 0,
//
// which has a simple root even at the fixed point t = j = 2pi/3 and no
// cancellation between O(1) terms near t = pi.
double deflated_relation(double a, double c) {
  const double one_minus_c = 1.0 - c;
  return c * one_minus_c * one_minus_c + a * c * one_minus_c + a * a * c - a * a * a;
}

double d_relation_da(double a, double c) {
  return c * (1.0 - c) + 2.0 * a * c - 3.0 * a * a;
}

double d_relation_dc(double a, double c) {
  return (1.0 - c) * (1.0 - 3.0 * c) + a * (1.0 - 2.0 * c) + a * a;
}

double half_angle_sq(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

// Accepts t in [2pi/3, pi] or its mirror; returns |t| and the sign.
double checked_long_angle(double t, const char* what, double& sign) {
  constexpr double kSlack = 1e-12;
  const double at = std::abs(t);
  if (!(at >= kEndpointAngle - kSlack && at <= kPi + kSlack)) {
    throw DomainError(std::string(what) + ": t must satisfy 2pi/3 <= |t| <= pi");
  }
  sign = t < 0.0 ? -1.0 : 1.0;
  return std::clamp(at, kEndpointAngle, kPi);
}

double newton_polish_short(double j, double c, int steps) {
  for (int i = 0; i < steps; ++i) {
    const double a = half_angle_sq(j);
    const double slope = d_relation_da(a, c) * 0.5 * std::sin(j);
    if (slope == 0.0) break;
    j -= deflated_relation(a, c) / slope;
  }
  return j;
}

}  // namespace

double fold_residual(double t, double j) {
  return std::sin(j) * half_angle_sq(j) - std::sin(t) * half_angle_sq(t);
}

double fold_closed_form(double t) {
  double sign = 1.0;
  const double at = checked_long_angle(t, "fold_closed_form", sign);
  const double u = kPi - at;
  if (at == kEndpointAngle) return sign * kEndpointAngle;
  if (u == 0.0) return 0.0;

  const double c = half_angle_sq(u);
  if (u < 1e-6) {
    const double j0 = std::cbrt(4.0 * u) + u / 3.0;
    return sign * newton_polish_short(j0, c, 2);
  }

  const double s = 1.0 - c;  // sin^2(t/2); only used where it is O(1)
  const double r = std::cbrt(
      c * (2.0 + 5.0 * s + 20.0 * s * s + s * std::sqrt(27.0 * (3.0 + 8.0 * s + 16.0 * s * s))) /
      2.0);
  const double js = (c * (1.0 + (1.0 + 2.0 * s) / r) + r) / 3.0;
  return sign * 2.0 * std::asin(std::sqrt(std::clamp(js, 0.0, 1.0)));
}

double fold_oracle(double t) {
  double sign = 1.0;
  const double at = checked_long_angle(t, "fold_oracle", sign);
  const double u = kPi - at;
  if (at == kEndpointAngle) return sign * kEndpointAngle;
  if (u == 0.0) return 0.0;

  const double c = half_angle_sq(u);
  double lo = 0.0;
  double hi = kEndpointAngle;
  // D > 0 at j = 0 and D < 0 at j = 2pi/3 whenever t > 2pi/3.
  if (!(deflated_relation(0.0, c) > 0.0) ||
      !(deflated_relation(half_angle_sq(hi), c) <= 0.0)) {
    throw NumericError("fold_oracle: root not bracketed", 0.5 * (lo + hi));
  }
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (deflated_relation(half_angle_sq(mid), c) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return sign * 0.5 * (lo + hi);
}

double fold_prime(double t) {
  double sign = 1.0;
  const double at = checked_long_angle(t, "fold_prime", sign);
  if (at == kEndpointAngle) return -1.0;
  const double u = kPi - at;
  if (u == 0.0) throw SingularityError("fold_prime: J' diverges at t = pi");

  // J' = g'(t)/g'(J) with g'(x) = (1 - cos x)(1 + 2 cos x)/2, written in a and c.
  const double c = half_angle_sq(u);
  const double a = half_angle_sq(fold_closed_form(at));
  return (1.0 - c) * (4.0 * c - 1.0) / (a * (3.0 - 4.0 * a));
}

double unfold(double j) {
  constexpr double kSlack = 1e-12;
  if (!(j >= -kSlack && j <= kEndpointAngle + kSlack)) {
    throw DomainError("unfold: j must lie in [0, 2pi/3]");
  }
  j = std::clamp(j, 0.0, kEndpointAngle);
  if (j == 0.0) return kPi;
  if (j == kEndpointAngle) return kEndpointAngle;

  const double a = half_angle_sq(j);
  // D(a, .) is increasing in c on [0, 1/4]; bracket and safeguard Newton.
  double lo = 0.0;
  double hi = 0.25;
  const double u_seed = std::min(j * j * j / 4.0, kPi / 3.0);
  double c = std::clamp(half_angle_sq(u_seed), lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double f = deflated_relation(a, c);
    if (f == 0.0) break;
    if (f < 0.0) {
      lo = c;
    } else {
      hi = c;
    }
    const double df = d_relation_dc(a, c);
    double next = df > 0.0 ? c - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - c);
    c = next;
    if (step <= 1e-17 + 1e-16 * c || hi - lo <= 1e-17) break;
  }
  const double u = 2.0 * std::asin(std::sqrt(c));
  return kPi - u;
}

double fold_angle(double theta) {
  if (theta > kEndpointAngle) return fold_closed_form(theta);
  if (theta < -kEndpointAngle) return fold_closed_form(theta);
  return theta;
}

FoldValue evaluate_fold(double t) {
  FoldValue v;
  v.t = t;
  v.j = fold_closed_form(t);
  v.derivative = fold_prime(t);
  return v;
}

}  // namespace lshape
