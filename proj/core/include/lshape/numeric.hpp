#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace lshape {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// Unit-circle angle of the arc endpoints.
inline constexpr double kEndpointAngle = 2.0 * std::numbers::pi / 3.0;

/// Length of each segment of the arc, 27^(1/4).
inline const double kSegmentLength = std::pow(27.0, 0.25);

struct ScalarOptimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Golden-section search for a maximum of a unimodal f on [a, b].
/// Stops when the bracket is narrower than tol (absolute, in x).
template <typename F>
ScalarOptimum golden_section_maximize(F&& f, double a, double b, double tol,
                                      int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  ScalarOptimum out;
  int it = 0;
  for (; it < max_iterations && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  out.iterations = it;
  out.converged = (b - a) <= tol;
  if (fc >= fd) {
    out.x = c;
    out.fx = fc;
  } else {
    out.x = d;
    out.fx = fd;
  }
  return out;
}

template <typename F>
ScalarOptimum golden_section_minimize(F&& f, double a, double b, double tol,
                                      int max_iterations = 200) {
  auto r = golden_section_maximize([&](double x) { return -f(x); }, a, b, tol,
                                   max_iterations);
  r.fx = -r.fx;
  return r;
}

}  // namespace lshape
