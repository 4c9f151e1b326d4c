#include <algorithm>
#include <cmath>
#include <vector>

#include "lshape/errors.hpp"
#include "lshape/metrics.hpp"

namespace lshape {
namespace {

struct Candidate {
  double value;
  double t;
  double lo;
  double hi;
};

}  // namespace

MetricRecord lebesgue_constant(const NodeFamily& family, const LebesgueSettings& settings) {
  if (settings.grid_per_gap < 8) throw DomainError("lebesgue_constant: grid_per_gap must be >= 8");
  if (!(settings.refine_tol > 0.0)) throw DomainError("lebesgue_constant: refine_tol must be > 0");

  MetricRecord rec;
  rec.metric = "lebesgue";
  rec.n = family.n;
  rec.family = to_string(family.kind);
  rec.settings["grid_per_gap"] = format_exact(settings.grid_per_gap);
  rec.settings["refine_tol"] = format_exact(settings.refine_tol);
  rec.settings["refine_candidates"] = format_exact(settings.refine_candidates);

  if (family.n == 0) {
    rec.value = 1.0;
    rec.location = 0.0;
    return rec;
  }

  const DerivativeTable table = build_derivative_table(family);
  auto lambda = [&](double t) { return lebesgue_function(family, table, boundary_point(t)); };

  std::vector<double> breaks = family.folded;
  breaks.push_back(-kEndpointAngle);
  breaks.push_back(kEndpointAngle);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Best sample of every gap, then the strongest gaps are refined.
  const int g = settings.grid_per_gap;
  std::vector<Candidate> per_gap;
  per_gap.reserve(breaks.size());
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double a = breaks[i - 1];
    const double b = breaks[i];
    const double h = (b - a) / (g + 1);
    Candidate best{-1.0, a, a, b};
    for (int s = 1; s <= g; ++s) {
      const double t = a + s * h;
      const double v = lambda(t);
      if (v > best.value) best = {v, t, std::max(a, t - h), std::min(b, t + h)};
    }
    per_gap.push_back(best);
  }
  const std::size_t keep = std::min<std::size_t>(std::max(settings.refine_candidates, 1), per_gap.size());
  std::partial_sort(per_gap.begin(), per_gap.begin() + static_cast<std::ptrdiff_t>(keep), per_gap.end(),
                    [](const Candidate& x, const Candidate& y) {
                      return x.value > y.value || (x.value == y.value && x.t < y.t);
                    });

  double best_v = per_gap.front().value;
  double best_t = per_gap.front().t;
  for (std::size_t i = 0; i < keep; ++i) {
    const auto opt = golden_section_maximize(lambda, per_gap[i].lo, per_gap[i].hi,
                                             settings.refine_tol, 400);
    if (opt.fx > best_v) {
      best_v = opt.fx;
      best_t = opt.x;
    }
  }
  rec.value = best_v;
  rec.location = best_t;
  return rec;
}

WitnessResult lower_bound_witness(int n) {
  if (n < 6) throw DomainError("lower_bound_witness: n must be >= 6");
  const NodeFamily family = build_raw(n);
  const DerivativeTable table = build_derivative_table(family);
  const double t0 = 0.5 * (family.angles[0] + family.angles[1]);
  const Complex z0 = boundary_point(t0);

  double partial = 0.0;
  const int last = n / 6;
  for (int k = 0; k <= last; ++k) {
    partial += log_abs_basis(family.points, table, static_cast<std::size_t>(k), z0).magnitude();
  }

  WitnessResult out;
  out.full.metric = "witness";
  out.full.n = n;
  out.full.family = "raw";
  out.full.value = lebesgue_function(family, table, z0);
  out.full.location = t0;
  out.partial = out.full;
  out.partial.metric = "witness_partial";
  out.partial.value = partial;
  out.partial.settings["last_index"] = format_exact(last);
  return out;
}

}  // namespace lshape
