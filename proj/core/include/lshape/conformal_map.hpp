#pragma once

// Exterior conformal map of the L-shaped arc
//
//   Gamma = [0, 27^(1/4) e^{+3i pi/4}] U [0, 27^(1/4) e^{-3i pi/4}],
//
// given by psi(w) = (w - 1/w) sqrt((w - 1)/(w + 1)) with the principal
// square root. The alternative form with sqrt((1 - w)/(1 + w)) maps onto the
// reflected arc (endpoints at e^{+-i pi/4}); it is kept only as
// psi_reflected() so verification can show the endpoint identity failing.

#include <span>
#include <vector>

#include "lshape/numeric.hpp"

namespace lshape {

enum class RhoConvention {
  kOneOverN,         // rho_n = 1 + 1/n
  kOneOverNPlusOne,  // rho_n = 1 + 1/(n + 1)
};

enum class Branch { kUpper, kLower };

/// Point on one segment of the arc, s in [0, 1] measured from the corner.
struct ArcPoint {
  Branch branch = Branch::kUpper;
  double s = 0.0;
};

/// Level curve Gamma_n = psi(rho_n |w| = 1).
struct LevelCurve {
  int n = 0;
  double rho = 2.0;
  RhoConvention convention = RhoConvention::kOneOverNPlusOne;

  /// Throws DomainError for n < 0, or n == 0 with the 1/n convention.
  static LevelCurve make(int n, RhoConvention convention = RhoConvention::kOneOverNPlusOne);
};

[[nodiscard]] Complex psi(Complex w);
[[nodiscard]] Complex psi_reflected(Complex w);

/// psi'(w) = sqrt((w-1)/(w+1)) (w^2 + w + 1) / w^2. Throws SingularityError at w = -1.
[[nodiscard]] Complex psi_prime(Complex w);

/// psi(e^{it}).
[[nodiscard]] Complex boundary_point(double t);

[[nodiscard]] Complex arc_point(ArcPoint a);
/// |dz/ds| along either segment.
[[nodiscard]] double arc_measure_weight();
[[nodiscard]] double arc_length();

/// psi(rho e^{it}).
[[nodiscard]] Complex level_point(const LevelCurve& curve, double t);

/// Euclidean distance from z to the level curve, minimised locally from each
/// seed angle; the smallest local minimum is returned.
[[nodiscard]] double dist_to_level(Complex z, const LevelCurve& curve,
                                   std::span<const double> seed_angles);

/// Angle in [-pi, pi] that attains dist_to_level (same search).
struct LevelDistance {
  double distance = 0.0;
  double angle = 0.0;
};
[[nodiscard]] LevelDistance nearest_level_point(Complex z, const LevelCurve& curve,
                                                std::span<const double> seed_angles);

}  // namespace lshape
