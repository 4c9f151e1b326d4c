#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lshape/errors.hpp"
#include "lshape/metrics.hpp"

namespace lshape {
namespace {

const char* rho_label(RhoConvention c) {
  return c == RhoConvention::kOneOverN ? "n" : "n+1";
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

// Running left-Riemann sums for one window, all in log form.
struct ApAccumulator {
  double p;
  double q;
  double log_a = -std::numeric_limits<double>::infinity();
  double log_b = -std::numeric_limits<double>::infinity();
  double length = 0.0;

  void add(double log_w, double ds) {
    const double lds = std::log(ds);
    log_a = log_sum_exp(log_a, p * log_w + lds);
    log_b = log_sum_exp(log_b, -q * log_w + lds);
    length += ds;
  }
  [[nodiscard]] double value() const {
    const double ll = std::log(length);
    return std::exp((log_a - ll) / p + (log_b - ll) / q);
  }
};

}  // namespace

LevelExtrema level_minmax(const NodeFamily& family, RhoConvention convention, int samples) {
  const int n = family.n;
  if (samples <= 0) samples = 64 * (n + 1);
  if (samples < 8) samples = 8;
  const LevelCurve curve = LevelCurve::make(n, convention);
  auto log_w = [&](double t) { return log_abs_omega(family, level_point(curve, t)).value; };

  const double h = kTwoPi / samples;
  std::vector<double> lw(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) lw[i] = log_w(-kPi + i * h);
  const auto [mn_it, mx_it] = std::minmax_element(lw.begin(), lw.end());
  const double t_min = -kPi + static_cast<double>(mn_it - lw.begin()) * h;
  const double t_max = -kPi + static_cast<double>(mx_it - lw.begin()) * h;

  const auto lo = golden_section_minimize(log_w, t_min - h, t_min + h, 1e-12, 200);
  const auto hi = golden_section_maximize(log_w, t_max - h, t_max + h, 1e-12, 200);
  const double min_log = std::min(lo.fx, *mn_it);
  const double max_log = std::max(hi.fx, *mx_it);

  LevelExtrema out;
  for (MetricRecord* r : {&out.min, &out.max}) {
    r->n = n;
    r->family = to_string(family.kind);
    r->settings["rho"] = rho_label(convention);
    r->settings["samples"] = format_exact(samples);
  }
  out.min.metric = "level_min";
  out.min.value = std::exp(min_log);
  out.min.location = std::remainder(lo.fx <= *mn_it ? lo.x : t_min, kTwoPi);
  out.max.metric = "level_max";
  out.max.value = std::exp(max_log);
  out.max.location = std::remainder(hi.fx >= *mx_it ? hi.x : t_max, kTwoPi);
  out.ratio = std::exp(max_log - min_log);
  return out;
}

LevelExtrema level_minmax(int n, RhoConvention convention, int samples) {
  return level_minmax(build_raw(n), convention, samples);
}

double ap_window_value(std::span<const double> log_w, std::span<const double> ds, double p) {
  if (!(p > 1.0)) throw DomainError("ap_window_value: p must be > 1");
  if (log_w.size() != ds.size() || log_w.empty()) {
    throw DomainError("ap_window_value: need matching, nonempty samples");
  }
  ApAccumulator acc{p, p / (p - 1.0)};
  for (std::size_t i = 0; i < ds.size(); ++i) acc.add(log_w[i], ds[i]);
  return acc.value();
}

int default_window_max(int n) { return std::max(512, 4 * (n + 1)); }

std::vector<MetricRecord> muckenhoupt_constants(const NodeFamily& family, std::span<const double> ps,
                                                const MuckenhouptSettings& settings) {
  for (const double p : ps) {
    if (!(p > 1.0)) throw DomainError("muckenhoupt_constant: p must be > 1");
  }
  if (settings.step_denom < 1) throw DomainError("muckenhoupt_constant: step_denom must be >= 1");
  const int n = family.n;
  const int w = settings.window_max > 0 ? settings.window_max : default_window_max(n);
  const LevelCurve curve = LevelCurve::make(n, settings.convention);

  const LevelExtrema ext = level_minmax(family, settings.convention, settings.search_samples);
  const double t0 = *ext.min.location;
  const double h = kPi / (static_cast<double>(settings.step_denom) * (n + 1.0));

  // Samples t_{-w} .. t_w; index i <-> t_{i - w}.
  const std::size_t count = 2 * static_cast<std::size_t>(w) + 1;
  std::vector<Complex> z(count);
  std::vector<double> lw(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = t0 + (static_cast<double>(i) - w) * h;
    z[i] = level_point(curve, t);
    lw[i] = log_abs_omega(family, z[i]).value;
  }
  std::vector<double> ds(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) ds[i] = std::abs(z[i + 1] - z[i]);

  std::vector<MetricRecord> out;
  for (const double p : ps) {
    const double q = p / (p - 1.0);
    double best = 0.0;
    int best_a = 0;
    int best_b = 0;
    if (settings.mode == WindowMode::kCentered) {
      ApAccumulator acc{p, q};
      for (int m = 1; m <= w; ++m) {
        acc.add(lw[w + m - 1], ds[w + m - 1]);
        acc.add(lw[w - m], ds[w - m]);
        const double v = acc.value();
        if (v > best) {
          best = v;
          best_a = -m;
          best_b = m;
        }
      }
    } else {
      const int steps = static_cast<int>(ds.size());
      for (int s = 0; s < steps; ++s) {
        ApAccumulator acc{p, q};
        for (int e = s; e < std::min(steps, s + w); ++e) {
          acc.add(lw[e], ds[e]);
          const double v = acc.value();
          if (v > best) {
            best = v;
            best_a = s - w;
            best_b = e + 1 - w;
          }
        }
      }
    }

    MetricRecord rec;
    rec.metric = "muckenhoupt";
    rec.n = n;
    rec.family = to_string(family.kind);
    rec.p = p;
    rec.value = best;
    rec.location = t0;
    rec.settings["rho"] = rho_label(settings.convention);
    rec.settings["step_denom"] = format_exact(settings.step_denom);
    rec.settings["window_max"] = format_exact(w);
    rec.settings["window_mode"] = settings.mode == WindowMode::kCentered ? "centered" : "all";
    rec.settings["search_samples"] = ext.min.settings.at("samples");
    rec.settings["best_window_begin"] = format_exact(best_a);
    rec.settings["best_window_end"] = format_exact(best_b);
    out.push_back(std::move(rec));
  }
  return out;
}

MetricRecord muckenhoupt_constant(const NodeFamily& family, double p,
                                  const MuckenhouptSettings& settings) {
  const double ps[] = {p};
  return muckenhoupt_constants(family, ps, settings).front();
}

}  // namespace lshape
