#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "lshape/errors.hpp"
#include "lshape/metrics.hpp"

namespace lshape {
namespace {

struct Line {
  double a;
  double b;
  double rss;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double scale = std::max(1.0, std::abs(mx));
  if (!(sxx > 1e-24 * scale * scale * m)) throw FitError("fit_growth: singular design matrix");
  Line l{};
  l.b = sxy / sxx;
  l.a = my - l.b * mx;
  l.rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (l.a + l.b * x[i]);
    l.rss += r * r;
  }
  return l;
}

std::vector<double> powers(const std::vector<double>& ns, double beta) {
  std::vector<double> x(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) x[i] = std::pow(ns[i], beta);
  return x;
}

}  // namespace

const char* to_string(FitModel model) {
  return model == FitModel::kAffineInLogN ? "affine_in_logn" : "power_law";
}

FitModel parse_fit_model(const char* text) {
  if (std::strcmp(text, "affine_in_logn") == 0 || std::strcmp(text, "affine") == 0) {
    return FitModel::kAffineInLogN;
  }
  if (std::strcmp(text, "power_law") == 0 || std::strcmp(text, "power") == 0) {
    return FitModel::kPowerLaw;
  }
  throw DomainError(std::string("unknown fit model: ") + text);
}

FitResult fit_growth(std::span<const double> ns, std::span<const double> values, FitModel model) {
  if (ns.size() != values.size()) throw FitError("fit_growth: size mismatch");
  if (ns.size() < 3) throw FitError("fit_growth: need at least 3 points");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!std::isfinite(values[i])) throw FitError("fit_growth: non-finite value");
    if (!(ns[i] >= 1.0)) throw FitError("fit_growth: n must be >= 1");
  }

  FitResult out;
  out.model = model;
  out.ns.assign(ns.begin(), ns.end());
  out.n_min = static_cast<int>(*std::min_element(ns.begin(), ns.end()));
  out.n_max = static_cast<int>(*std::max_element(ns.begin(), ns.end()));

  if (model == FitModel::kAffineInLogN) {
    std::vector<double> x(ns.size());
    std::vector<double> y(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (!(ns[i] > 1.0)) throw FitError("fit_growth: affine model needs n > 1");
      x[i] = std::log(ns[i]);
      y[i] = values[i] / x[i];
    }
    const Line l = least_squares(x, y);
    out.a = l.a;
    out.b = l.b;
    out.observed = y;
    for (const double xi : x) out.predicted.push_back(l.a + l.b * xi);
    out.residual_rms = std::sqrt(l.rss / static_cast<double>(x.size()));
    return out;
  }

  const std::vector<double> n_vec(ns.begin(), ns.end());
  const std::vector<double> y(values.begin(), values.end());
  auto rss = [&](double beta) { return least_squares(powers(n_vec, beta), y).rss; };

  // RSS(beta) need not be unimodal; scan first, then polish the best cell.
  constexpr double kLo = 0.05;
  constexpr double kHi = 2.0;
  constexpr int kScan = 391;
  const double step = (kHi - kLo) / (kScan - 1);
  int best_i = 0;
  double best_rss = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double r = rss(kLo + i * step);
    if (r < best_rss) {
      best_rss = r;
      best_i = i;
    }
  }
  const double lo = std::max(kLo, kLo + (best_i - 1) * step);
  const double hi = std::min(kHi, kLo + (best_i + 1) * step);
  const auto opt = golden_section_minimize(rss, lo, hi, 1e-10, 200);
  const double beta = opt.fx <= best_rss ? opt.x : kLo + best_i * step;

  const Line l = least_squares(powers(n_vec, beta), y);
  out.a = l.a;
  out.b = l.b;
  out.beta = beta;
  out.observed = y;
  for (const double n : n_vec) out.predicted.push_back(l.a + l.b * std::pow(n, beta));
  out.residual_rms = std::sqrt(l.rss / static_cast<double>(y.size()));
  return out;
}

FitResult fit_growth(std::span<const MetricRecord> records, FitModel model) {
  std::vector<double> ns;
  std::vector<double> vs;
  for (const auto& r : records) {
    ns.push_back(static_cast<double>(r.n));
    vs.push_back(r.value);
  }
  return fit_growth(ns, vs, model);
}

}  // namespace lshape
