#pragma once

// Magnitudes of the nodal polynomial omega(z) = prod (z - z_k) and of the
// Lagrange basis, kept in natural-log form so that degree 10^4 products
// neither overflow nor underflow.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "lshape/node_families.hpp"
#include "lshape/numeric.hpp"

namespace lshape {

struct LogMagnitude {
  double value = -std::numeric_limits<double>::infinity();

  [[nodiscard]] static LogMagnitude zero() { return {}; }
  [[nodiscard]] static LogMagnitude from_log(double v) { return {v}; }
  [[nodiscard]] bool is_zero() const { return value == -std::numeric_limits<double>::infinity(); }
  [[nodiscard]] double magnitude() const { return std::exp(value); }
};

/// log |omega(z)|; zero() iff z coincides with a node.
[[nodiscard]] LogMagnitude log_abs_omega(std::span<const Complex> nodes, Complex z);
[[nodiscard]] LogMagnitude log_abs_omega(const NodeFamily& family, Complex z);
[[nodiscard]] LogMagnitude log_abs_omega(const LevelNodes& level, Complex z);

/// log |omega'(z_k)| = sum_{j != k} log |z_k - z_j|.
struct DerivativeTable {
  std::vector<double> logs;
};

/// O(n^2). Throws DuplicateNodeError if two nodes coincide exactly.
[[nodiscard]] DerivativeTable build_derivative_table(std::span<const Complex> nodes);
[[nodiscard]] DerivativeTable build_derivative_table(const NodeFamily& family);

/// log |P_k(z)| for the Lagrange basis polynomial of node k, with the
/// z - z_k factor cancelled analytically (so it is 0 at z = z_k).
[[nodiscard]] LogMagnitude log_abs_basis(std::span<const Complex> nodes,
                                         const DerivativeTable& table, std::size_t k, Complex z);

/// sum_k |P_k(z)|; exactly 1 at a node.
[[nodiscard]] double lebesgue_function(std::span<const Complex> nodes, const DerivativeTable& table,
                                       Complex z);
[[nodiscard]] double lebesgue_function(const NodeFamily& family, const DerivativeTable& table,
                                       Complex z);

/// Four-factor surrogate |(z - z_k1)(z - z_k2) / ((z - z*_k1)(z - z*_k2))| at
/// z = psi(e^{it}), t in [-2pi/3, 2pi/3], with the raw family and its level
/// nodes for the same n.
[[nodiscard]] double asymptotic_omega_estimate(const NodeFamily& raw, const LevelNodes& level,
                                               double t);

}  // namespace lshape
