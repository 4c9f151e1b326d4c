#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lshape/conformal_map.hpp"
#include "lshape/metric_record.hpp"
#include "lshape/nodal_poly.hpp"
#include "lshape/node_families.hpp"

namespace lshape {

// ---- Lebesgue constant --------------------------------------------------

struct LebesgueSettings {
  int grid_per_gap = 64;      // samples inside each gap between folded nodes
  double refine_tol = 1e-10;  // golden-section bracket width, in folded angle
  int refine_candidates = 5;
};

/// max over the arc of the Lebesgue function; location is the folded angle.
[[nodiscard]] MetricRecord lebesgue_constant(const NodeFamily& family,
                                             const LebesgueSettings& settings = {});

struct WitnessResult {
  MetricRecord full;     // Lebesgue function at psi(e^{i t0}), t0 = (theta_0 + theta_1)/2
  MetricRecord partial;  // the same sum restricted to k <= n/6
};

/// Raw family, n >= 6.
[[nodiscard]] WitnessResult lower_bound_witness(int n);

// ---- |omega| on the level curve -----------------------------------------

struct LevelExtrema {
  MetricRecord min;
  MetricRecord max;
  double ratio = 0.0;
};

/// Extrema of |omega| over Gamma_n from `samples` uniform angles in [-pi, pi)
/// followed by golden-section refinement. samples <= 0 means 64 (n + 1).
[[nodiscard]] LevelExtrema level_minmax(const NodeFamily& family,
                                        RhoConvention convention = RhoConvention::kOneOverNPlusOne,
                                        int samples = 0);
[[nodiscard]] LevelExtrema level_minmax(int n,
                                        RhoConvention convention = RhoConvention::kOneOverNPlusOne,
                                        int samples = 0);

// ---- Muckenhoupt A_p constant ---------------------------------------------

enum class WindowMode {
  kCentered,       // arcs [t_{-m}, t_m] around the minimiser t_0, m = 1..window_max
  kAllContiguous,  // every run of at most window_max steps inside t_{-window_max}..t_{window_max}
};

struct MuckenhouptSettings {
  int step_denom = 128;    // step pi / (step_denom (n + 1))
  int window_max = 0;      // in steps; <= 0 means default_window_max(n)
  WindowMode mode = WindowMode::kCentered;
  RhoConvention convention = RhoConvention::kOneOverNPlusOne;
  int search_samples = 0;  // for locating t_0; <= 0 means 64 (n + 1)
};

/// max(512, 4 (n + 1)) steps: wide enough that the supremum has saturated.
[[nodiscard]] int default_window_max(int n);

[[nodiscard]] MetricRecord muckenhoupt_constant(const NodeFamily& family, double p,
                                                const MuckenhouptSettings& settings = {});
/// Same, sharing the minimiser search and the sample grid across several p.
[[nodiscard]] std::vector<MetricRecord> muckenhoupt_constants(
    const NodeFamily& family, std::span<const double> ps, const MuckenhouptSettings& settings = {});

/// Windowed A_p quantity for one run of samples; exposed for tests.
/// log_w[i] = log |omega(t_i)|, ds[i] = |z_{i+1} - z_i|, windows use left sums.
[[nodiscard]] double ap_window_value(std::span<const double> log_w, std::span<const double> ds,
                                     double p);

// ---- Marcinkiewicz-Zygmund ratios ---------------------------------------

struct MzSettings {
  double quad_tol = 1e-8;
  RhoConvention convention = RhoConvention::kOneOverNPlusOne;
};

/// Integral over the arc of |P_k|^p |dz|, by Gauss-Kronrod on every piece
/// between consecutive node positions of each segment.
[[nodiscard]] double basis_power_integral(const NodeFamily& family, const DerivativeTable& table,
                                          double p, int k, double quad_tol);

/// R = basis_power_integral / dist(z_k, Gamma_n); settings record dist.
[[nodiscard]] MetricRecord mz_ratio(const NodeFamily& family, const DerivativeTable& table,
                                    double p, int k, const MzSettings& settings = {});

[[nodiscard]] MetricRecord mz_ratio_worst(const NodeFamily& family, const DerivativeTable& table,
                                          double p, std::span<const int> k_subset,
                                          const MzSettings& settings = {});

/// Index of the node nearest the minimiser of |omega| on Gamma_n.
[[nodiscard]] int mz_index_near_min(const NodeFamily& family,
                                    RhoConvention convention = RhoConvention::kOneOverNPlusOne,
                                    int samples = 0);

// ---- Growth-law fits ----------------------------------------------------

enum class FitModel {
  kAffineInLogN,  // value / log n = a + b log n
  kPowerLaw,      // value = a + b n^beta
};

[[nodiscard]] const char* to_string(FitModel model);
[[nodiscard]] FitModel parse_fit_model(const char* text);

struct FitResult {
  FitModel model = FitModel::kAffineInLogN;
  double a = 0.0;
  double b = 0.0;
  double beta = 0.0;  // power law only
  double residual_rms = 0.0;
  int n_min = 0;
  int n_max = 0;
  std::vector<double> ns;
  std::vector<double> observed;   // the fitted response (value / log n for the affine model)
  std::vector<double> predicted;
};

/// Throws FitError for fewer than 3 points or a singular design.
[[nodiscard]] FitResult fit_growth(std::span<const double> ns, std::span<const double> values,
                                   FitModel model);
[[nodiscard]] FitResult fit_growth(std::span<const MetricRecord> records, FitModel model);

}  // namespace lshape
