#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "lshape/errors.hpp"
#include "lshape/metrics.hpp"

namespace lshape {
namespace {

constexpr unsigned kMaxDepth = 20;

std::vector<double> segment_breaks(const NodeFamily& family, Branch branch) {
  std::vector<double> s{0.0, 1.0};
  for (std::size_t k = 0; k < family.points.size(); ++k) {
    const double f = family.folded[k];
    const bool on = branch == Branch::kUpper ? f > 0.0 : f < 0.0;
    if (on) s.push_back(std::clamp(std::abs(family.points[k]) / kSegmentLength, 0.0, 1.0));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

double basis_power_integral(const NodeFamily& family, const DerivativeTable& table, double p,
                            int k, double quad_tol) {
  if (!(p > 0.0)) throw DomainError("basis_power_integral: p must be > 0");
  if (k < 0 || k > family.n) throw DomainError("basis_power_integral: k out of range");
  if (!(quad_tol > 0.0)) throw DomainError("basis_power_integral: quad_tol must be > 0");

  const auto uk = static_cast<std::size_t>(k);
  struct Piece {
    Complex dir;
    double a;
    double b;
    double rough_l1;
  };
  std::vector<Piece> pieces;
  for (const Branch br : {Branch::kUpper, Branch::kLower}) {
    const Complex dir = arc_point({br, 1.0}) / kSegmentLength;
    const auto breaks = segment_breaks(family, br);
    for (std::size_t i = 1; i < breaks.size(); ++i) pieces.push_back({dir, breaks[i - 1], breaks[i], 0.0});
  }
  auto integrand = [&](Complex dir) {
    return [&, dir](double s) {
      const LogMagnitude lb = log_abs_basis(family.points, table, uk, dir * (kSegmentLength * s));
      return lb.is_zero() ? 0.0 : std::exp(p * lb.value);
    };
  };

  // A single Kronrod pass gives each piece's share of the total; pieces are
  // then refined against an error budget proportional to the whole integral.
  // Near the segment ends nodes cluster at spacing ~1e-10 and the integrand
  // carries rounding noise, so per-piece relative targets would never be met.
  double rough_total = 0.0;
  for (auto& pc : pieces) {
    double err = 0.0;
    double l1 = 0.0;
    boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand(pc.dir), pc.a, pc.b, 0,
                                                                   0.0, &err, &l1);
    pc.rough_l1 = l1;
    rough_total += l1;
  }
  const double share = rough_total / static_cast<double>(pieces.size());

  double total = 0.0;
  double err_sum = 0.0;
  for (const auto& pc : pieces) {
    const double rel = pc.rough_l1 > 0.0 ? quad_tol * std::max(1.0, share / pc.rough_l1) : 1.0;
    double err = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand(pc.dir), pc.a, pc.b, kMaxDepth, std::min(rel, 0.5), &err);
    err_sum += err;
  }
  if (!std::isfinite(total) || err_sum > 10.0 * quad_tol * total) {
    throw NumericError("basis_power_integral: quadrature did not reach tolerance",
                       total * kSegmentLength);
  }
  return total * kSegmentLength;
}

MetricRecord mz_ratio(const NodeFamily& family, const DerivativeTable& table, double p, int k,
                      const MzSettings& settings) {
  if (!(p > 1.0)) throw DomainError("mz_ratio: p must be > 1");
  const double integral = basis_power_integral(family, table, p, k, settings.quad_tol);

  const LevelCurve curve = LevelCurve::make(family.n, settings.convention);
  const double theta = family.angles[static_cast<std::size_t>(k)];
  std::vector<double> seeds{theta};
  if (const auto sister = fold_sister(theta)) seeds.push_back(*sister);
  const double dist = dist_to_level(family.points[static_cast<std::size_t>(k)], curve, seeds);

  MetricRecord rec;
  rec.metric = "mz_ratio";
  rec.n = family.n;
  rec.family = to_string(family.kind);
  rec.p = p;
  rec.value = integral / dist;
  rec.location = static_cast<double>(k);
  rec.settings["k"] = format_exact(k);
  rec.settings["quad_tol"] = format_exact(settings.quad_tol);
  rec.settings["rho"] = settings.convention == RhoConvention::kOneOverN ? "n" : "n+1";
  rec.settings["integral"] = format_exact(integral);
  rec.settings["dist"] = format_exact(dist);
  return rec;
}

MetricRecord mz_ratio_worst(const NodeFamily& family, const DerivativeTable& table, double p,
                            std::span<const int> k_subset, const MzSettings& settings) {
  if (k_subset.empty()) throw DomainError("mz_ratio_worst: empty index subset");
  MetricRecord best;
  bool have = false;
  for (const int k : k_subset) {
    MetricRecord r = mz_ratio(family, table, p, k, settings);
    if (!have || r.value > best.value) {
      best = std::move(r);
      have = true;
    }
  }
  best.metric = "mz_ratio_worst";
  best.settings["subset_size"] = format_exact(static_cast<int>(k_subset.size()));
  return best;
}

int mz_index_near_min(const NodeFamily& family, RhoConvention convention, int samples) {
  const LevelExtrema ext = level_minmax(family, convention, samples);
  const Complex zeta = level_point(LevelCurve::make(family.n, convention), *ext.min.location);
  int best = 0;
  double best_d = std::abs(family.points[0] - zeta);
  for (std::size_t k = 1; k < family.points.size(); ++k) {
    const double d = std::abs(family.points[k] - zeta);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(k);
    }
  }
  return best;
}

}  // namespace lshape
