#include "lshape/conformal_map.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lshape/errors.hpp"

namespace lshape {
namespace {

constexpr double kUnitDiskSlack = 1e-12;

void require_exterior(Complex w, const char* what) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
  if (w == Complex(0.0, 0.0)) {
    throw DomainError(std::string(what) + ": w = 0");
  }
  if (std::abs(w) < 1.0 - kUnitDiskSlack) {
    throw DomainError(std::string(what) + ": |w| < 1");
  }
}

// Direction of the upper segment, e^{3 i pi / 4}.
const Complex kUpperDirection = std::polar(1.0, 0.75 * kPi);

double distance_at(Complex z, const LevelCurve& curve, double t) {
  return std::abs(z - level_point(curve, t));
}

}  // namespace

LevelCurve LevelCurve::make(int n, RhoConvention convention) {
  if (n < 0) throw DomainError("LevelCurve: n must be >= 0");
  LevelCurve c;
  c.n = n;
  c.convention = convention;
  if (convention == RhoConvention::kOneOverN) {
    if (n == 0) throw DomainError("LevelCurve: rho = 1 + 1/n needs n >= 1");
    c.rho = 1.0 + 1.0 / n;
  } else {
    c.rho = 1.0 + 1.0 / (n + 1.0);
  }
  return c;
}

Complex psi(Complex w) {
  require_exterior(w, "psi");
  if (w == Complex(-1.0, 0.0)) return {0.0, 0.0};
  return (w - 1.0 / w) * std::sqrt((w - 1.0) / (w + 1.0));
}

Complex psi_reflected(Complex w) {
  require_exterior(w, "psi_reflected");
  if (w == Complex(-1.0, 0.0)) return {0.0, 0.0};
  return (w - 1.0 / w) * std::sqrt((1.0 - w) / (1.0 + w));
}

Complex psi_prime(Complex w) {
  require_exterior(w, "psi_prime");
  if (w == Complex(-1.0, 0.0)) {
    throw SingularityError("psi_prime: pole at w = -1");
  }
  return std::sqrt((w - 1.0) / (w + 1.0)) * (w * w + w + 1.0) / (w * w);
}

Complex boundary_point(double t) {
  // On |w| = 1: w - 1/w = 2i sin t and (w-1)/(w+1) = i tan(t/2), so psi lies
  // on the ray e^{+-3i pi/4} with |psi|^2 = 16 sin^3(t/2) cos(t/2).
  // cos(t/2) is taken as sin((pi - |t|)/2) so that t = +-kPi lands exactly on
  // the corner preimage.
  const double s = std::sin(0.5 * t);
  const double c = std::max(std::sin(0.5 * (kPi - std::abs(t))), 0.0);
  const double as = std::abs(s);
  const double magnitude = 4.0 * std::sqrt(as * as * as * c);
  return t >= 0.0 ? magnitude * kUpperDirection : magnitude * std::conj(kUpperDirection);
}

Complex arc_point(ArcPoint a) {
  if (!(a.s >= 0.0 && a.s <= 1.0)) {
    throw DomainError("arc_point: s must lie in [0, 1]");
  }
  const Complex dir = a.branch == Branch::kUpper ? kUpperDirection : std::conj(kUpperDirection);
  return kSegmentLength * a.s * dir;
}

double arc_measure_weight() { return kSegmentLength; }

double arc_length() { return 2.0 * kSegmentLength; }

Complex level_point(const LevelCurve& curve, double t) {
  return psi(std::polar(curve.rho, t));
}

LevelDistance nearest_level_point(Complex z, const LevelCurve& curve,
                                  std::span<const double> seed_angles) {
  if (seed_angles.empty()) throw DomainError("dist_to_level: no seed angles");

  constexpr int kSamples = 64;
  LevelDistance best{std::numeric_limits<double>::infinity(), 0.0};
  for (const double seed : seed_angles) {
    // Coarse-to-fine scan; each pass keeps +-2 sample spacings around the
    // best sample, then golden-section finishes inside that bracket.
    double center = seed;
    double half = 0.5;
    while (half > 1e-9) {
      const double step = 2.0 * half / kSamples;
      double best_t = center;
      double best_f = distance_at(z, curve, center);
      for (int i = 0; i <= kSamples; ++i) {
        const double t = center - half + i * step;
        const double f = distance_at(z, curve, t);
        if (f < best_f) {
          best_f = f;
          best_t = t;
        }
      }
      center = best_t;
      half = 2.0 * step;
    }
    const auto opt = golden_section_minimize(
        [&](double t) { return distance_at(z, curve, t); }, center - half, center + half,
        1e-13, 200);
    if (!opt.converged) {
      throw NumericError("dist_to_level: golden-section did not converge", opt.fx);
    }
    const double f_center = distance_at(z, curve, center);
    const LevelDistance local = opt.fx <= f_center ? LevelDistance{opt.fx, opt.x}
                                                   : LevelDistance{f_center, center};
    if (local.distance < best.distance) best = local;
  }
  best.angle = std::remainder(best.angle, kTwoPi);
  return best;
}

double dist_to_level(Complex z, const LevelCurve& curve, std::span<const double> seed_angles) {
  return nearest_level_point(z, curve, seed_angles).distance;
}

}  // namespace lshape
