#include "lshape/nodal_poly.hpp"

#include <algorithm>
#include <cmath>

#include "lshape/errors.hpp"

namespace lshape {
namespace {

// Squared distances are multiplied in a running product and only flushed
// into the log accumulator when the product leaves a safe range.
constexpr double kFlushLow = 1e-150;
constexpr double kFlushHigh = 1e150;

struct LogAccumulator {
  double acc = 0.0;
  double prod = 1.0;

  void push(double d2) {
    prod *= d2;
    if (prod < kFlushLow || prod > kFlushHigh) {
      acc += std::log(prod);
      prod = 1.0;
    }
  }
  [[nodiscard]] double half_log() const { return 0.5 * (acc + std::log(prod)); }
};

}  // namespace

LogMagnitude log_abs_omega(std::span<const Complex> nodes, Complex z) {
  LogAccumulator a;
  for (const Complex& zk : nodes) {
    const double d2 = std::norm(z - zk);
    if (d2 == 0.0) return LogMagnitude::zero();
    a.push(d2);
  }
  return LogMagnitude::from_log(a.half_log());
}

LogMagnitude log_abs_omega(const NodeFamily& family, Complex z) {
  return log_abs_omega(std::span<const Complex>(family.points), z);
}

LogMagnitude log_abs_omega(const LevelNodes& level, Complex z) {
  return log_abs_omega(std::span<const Complex>(level.points), z);
}

DerivativeTable build_derivative_table(std::span<const Complex> nodes) {
  DerivativeTable t;
  t.logs.resize(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    LogAccumulator a;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      const double d2 = std::norm(nodes[k] - nodes[j]);
      if (d2 == 0.0) {
        throw DuplicateNodeError(static_cast<int>(std::min(j, k)), static_cast<int>(std::max(j, k)));
      }
      a.push(d2);
    }
    t.logs[k] = a.half_log();
  }
  return t;
}

DerivativeTable build_derivative_table(const NodeFamily& family) {
  return build_derivative_table(std::span<const Complex>(family.points));
}

LogMagnitude log_abs_basis(std::span<const Complex> nodes, const DerivativeTable& table,
                           std::size_t k, Complex z) {
  LogAccumulator a;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == k) continue;
    const double d2 = std::norm(z - nodes[j]);
    if (d2 == 0.0) return LogMagnitude::zero();
    a.push(d2);
  }
  return LogMagnitude::from_log(a.half_log() - table.logs[k]);
}

double lebesgue_function(std::span<const Complex> nodes, const DerivativeTable& table, Complex z) {
  // Every basis polynomial but the k-th vanishes at node k.
  for (const Complex& zk : nodes) {
    if (z == zk) return 1.0;
  }
  const double lw = log_abs_omega(nodes, z).value;
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    sum += std::exp(lw - table.logs[k]) / std::abs(z - nodes[k]);
  }
  return sum;
}

double lebesgue_function(const NodeFamily& family, const DerivativeTable& table, Complex z) {
  return lebesgue_function(std::span<const Complex>(family.points), table, z);
}

double asymptotic_omega_estimate(const NodeFamily& raw, const LevelNodes& level, double t) {
  if (raw.n != level.n) throw DomainError("asymptotic_omega_estimate: degree mismatch");
  const Complex z = boundary_point(t);
  const NearestIndices idx = k1_k2_locate(raw.n, t);
  double num = std::abs(z - raw.points[idx.k1]);
  double den = std::abs(z - level.points[idx.k1]);
  if (idx.k2) {
    num *= std::abs(z - raw.points[*idx.k2]);
    den *= std::abs(z - level.points[*idx.k2]);
  }
  return num / den;
}

}  // namespace lshape
