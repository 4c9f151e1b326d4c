#pragma once

// The fold J pairs the two unit-circle angles that psi sends to the same
// point of the arc: psi(e^{it}) = psi(e^{iJ(t)}) for t in [2pi/3, pi], with
// J(t) in [0, 2pi/3]. Equivalently sin(J) sin^2(J/2) = sin(t) sin^2(t/2).
// J is extended to [-pi, -2pi/3] as an odd function.

namespace lshape {

/// One evaluated point of the fold.
struct FoldValue {
  double t = 0.0;
  double j = 0.0;
  double derivative = 0.0;
};

/// J(t) from the Cardano-type closed form, evaluated in the variable
/// u = pi - t to avoid cancellation. For u < 1e-6 the closed form is replaced
/// by 4^(1/3) u^(1/3) + u/3 polished with two Newton steps.
/// Accepts t in [2pi/3, pi] or [-pi, -2pi/3]; anything else is a DomainError.
[[nodiscard]] double fold_closed_form(double t);

/// J(t) by bisection of the defining relation on [0, 2pi/3], to 1e-13.
/// Independent of fold_closed_form; used as its oracle.
[[nodiscard]] double fold_oracle(double t);

/// J'(t) = (cos t - cos 2t) / (cos J - cos 2J) on (2pi/3, pi).
/// Returns -1 at t = 2pi/3 (the limit) and throws SingularityError at t = pi.
[[nodiscard]] double fold_prime(double t);

/// Inverse of the fold: the unique t in [2pi/3, pi] with J(t) = j, for
/// j in [0, 2pi/3]. Safeguarded Newton seeded by t = pi - j^3/4.
[[nodiscard]] double unfold(double j);

/// Maps any angle in [-pi, pi] to its representative in [-2pi/3, 2pi/3].
[[nodiscard]] double fold_angle(double theta);

/// Residual sin(j) sin^2(j/2) - sin(t) sin^2(t/2).
[[nodiscard]] double fold_residual(double t, double j);

[[nodiscard]] FoldValue evaluate_fold(double t);

}  // namespace lshape
