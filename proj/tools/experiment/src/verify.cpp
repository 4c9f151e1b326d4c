#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lshape/conformal_map.hpp"
#include "lshape/corner_fold.hpp"
#include "lshape/errors.hpp"
#include "lshape/experiment/commands.hpp"
#include "lshape/experiment/pool.hpp"
#include "lshape/metrics.hpp"
#include "lshape/nodal_poly.hpp"
#include "lshape/node_families.hpp"

namespace lshape::experiment {
namespace {

struct CheckResult {
  bool pass = true;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Tracks the worst value of some error measure and the input that produced it.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (v > value || std::isnan(v)) {
      value = v;
      where = at;
    }
  }
  [[nodiscard]] CheckResult below(double tol) const {
    const bool ok = value < tol && !std::isnan(value);
    return {ok, "max " + num(value) + (where.empty() ? "" : " at " + where) + " (tol " + num(tol) + ")"};
  }
};

Complex random_exterior(std::mt19937& rng, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> r(r_lo, r_hi);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  return std::polar(r(rng), a(rng));
}

int scaled(const VerifyOptions& o, int quick, int full) {
  return o.scale == VerifyScale::kFull ? full : quick;
}

std::vector<Check> make_checks() {
  std::vector<Check> c;

  c.push_back({"endpoint identity", [](const VerifyOptions& o) {
    const Complex w = std::polar(1.0, kEndpointAngle);
    const Complex want = std::polar(kSegmentLength, 0.75 * kPi);
    auto map = [&](Complex x) { return o.flip_branch ? psi_reflected(x) : psi(x); };
    Worst e;
    e.update(std::abs(map(w) - want), "w = e^{2i pi/3}");
    e.update(std::abs(map(std::conj(w)) - std::conj(want)), "w = e^{-2i pi/3}");
    return e.below(1e-12);
  }});

  c.push_back({"magnitude law on |w| = 1", [](const VerifyOptions&) {
    Worst e;
    for (int i = 0; i < 512; ++i) {
      const double t = kPi * i / 511.0;
      const double lhs = std::norm(psi(std::polar(1.0, t)));
      const double rhs = 8.0 * std::sin(t) * std::pow(std::sin(0.5 * t), 2);
      e.update(std::abs(lhs - rhs), "t = " + num(t));
    }
    return e.below(1e-12);
  }});

  c.push_back({"conjugate symmetry of psi", [](const VerifyOptions&) {
    std::mt19937 rng(11);
    Worst e;
    for (int i = 0; i < 200; ++i) {
      const Complex w = random_exterior(rng, 1.0, 4.0);
      e.update(std::abs(psi(std::conj(w)) - std::conj(psi(w))), "w = " + num(w.real()) + "+" + num(w.imag()) + "i");
    }
    return e.below(1e-13);
  }});

  c.push_back({"psi' against central differences", [](const VerifyOptions&) {
    std::mt19937 rng(12);
    Worst e;
    int done = 0;
    while (done < 100) {
      const Complex w = random_exterior(rng, 1.01, 3.0);
      if (std::abs(w + 1.0) <= 0.1) continue;
      const double h = 1e-6;
      const Complex fd = (psi(w + h) - psi(w - h)) / (2.0 * h);
      const Complex an = psi_prime(w);
      e.update(std::abs(fd - an) / std::max(std::abs(an), 1e-300), "w = " + num(w.real()) + "+" + num(w.imag()) + "i");
      ++done;
    }
    return e.below(1e-6);
  }});

  c.push_back({"fold: closed form vs bisection oracle", [](const VerifyOptions& o) {
    const int m = scaled(o, 10000, 100000);
    Worst e;
    for (int i = 0; i <= m; ++i) {
      const double t = kEndpointAngle + (kPi - kEndpointAngle) * i / m;
      e.update(std::abs(fold_closed_form(t) - fold_oracle(t)), "t = " + num(t));
    }
    return e.below(1e-10);
  }});

  c.push_back({"fold: defining relation, monotone, odd", [](const VerifyOptions&) {
    Worst res;
    bool mono = true;
    bool odd = true;
    double prev = kEndpointAngle + 1.0;
    for (int i = 0; i <= 10000; ++i) {
      const double t = kEndpointAngle + (kPi - kEndpointAngle) * i / 10000.0;
      const double j = fold_closed_form(t);
      res.update(std::abs(fold_residual(t, j)), "t = " + num(t));
      if (i > 0 && !(j < prev)) mono = false;
      if (fold_closed_form(-t) != -j) odd = false;
      prev = j;
    }
    CheckResult r = res.below(1e-12);
    r.pass = r.pass && mono && odd;
    r.detail += mono ? "" : "; not strictly decreasing";
    r.detail += odd ? "" : "; oddness violated";
    return r;
  }});

  c.push_back({"fold: psi(e^{it}) = psi(e^{iJ(t)})", [](const VerifyOptions&) {
    Worst e;
    for (int i = 0; i <= 10000; ++i) {
      const double t = kEndpointAngle + 1e-6 + (kPi - kEndpointAngle - 1e-6) * i / 10000.0;
      e.update(std::abs(boundary_point(t) - boundary_point(fold_closed_form(t))), "t = " + num(t));
    }
    return e.below(1e-10);
  }});

  c.push_back({"fold: J' < -1 on the open interval", [](const VerifyOptions&) {
    double worst = -1e300;
    std::string at;
    for (int i = 1; i < 10000; ++i) {
      const double t = kEndpointAngle + (kPi - kEndpointAngle) * i / 10000.0;
      const double d = fold_prime(t);
      if (d > worst) {
        worst = d;
        at = num(t);
      }
    }
    return CheckResult{worst < -1.0, "max J' " + num(worst) + " at t = " + at};
  }});

  c.push_back({"unfold round trip", [](const VerifyOptions&) {
    Worst e;
    for (int i = 0; i <= 1000; ++i) {
      const double t = kEndpointAngle + (kPi - kEndpointAngle) * i / 1000.0;
      e.update(std::abs(unfold(fold_closed_form(t)) - t), "t = " + num(t));
    }
    return e.below(1e-10);
  }});

  c.push_back({"grid mirror rule and mapped points", [](const VerifyOptions&) {
    Worst e;
    for (int n = 0; n <= 300; ++n) {
      for (const FamilyKind kind : {FamilyKind::kRaw, FamilyKind::kAdjusted}) {
        const NodeFamily f = build_family(n, kind);
        const int m = n / 2;
        for (int k = m + 1; k <= n; ++k) {
          e.update(std::abs(f.angles[k] + f.angles[2 * m + 1 - k]), "n = " + std::to_string(n));
          e.update(std::abs(f.points[k] - std::conj(f.points[2 * m + 1 - k])), "n = " + std::to_string(n));
        }
        for (int k = 0; k <= n; ++k) {
          e.update(std::abs(f.points[k] - boundary_point(f.folded[k])), "n = " + std::to_string(n));
        }
      }
    }
    return e.below(1e-10);
  }});

  c.push_back({"adjusted separation", [](const VerifyOptions& o) {
    const int top = scaled(o, 1024, 4096);
    double worst = 1e300;
    int at = -1;
    for (int n = 1; n <= top; ++n) {
      const NodeFamily f = build_adjusted(n);
      const double gap = separation_margin(f) / (n + 1.0) - kEndpointAngle / (n + 1.0);
      if (gap < worst) {
        worst = gap;
        at = n;
      }
    }
    return CheckResult{worst >= -1e-12, "min (gap - 2pi/(3(n+1))) = " + num(worst) + " at n = " +
                                            std::to_string(at) + ", n <= " + std::to_string(top)};
  }});

  c.push_back({"adjustment moves and pair averages", [](const VerifyOptions&) {
    Worst avg;
    Worst move;
    for (int n = 1; n <= 1024; ++n) {
      const NodeFamily a = build_adjusted(n);
      const auto raw = theta_grid(n);
      const double d = kEndpointAngle / (n + 1.0);
      for (const auto& [k, j] : a.adjusted_pairs) {
        const std::string at = "n = " + std::to_string(n) + " pair (" + std::to_string(k) + ", " + std::to_string(j) + ")";
        avg.update(std::abs(fold_closed_form(a.angles[k]) + a.angles[j] - fold_closed_form(raw[k]) - raw[j]), at);
        move.update(std::abs(fold_closed_form(raw[k]) - fold_closed_form(a.angles[k])) - d, at);
        move.update(std::abs(raw[j] - a.angles[j]) - d, at);
      }
      const NodeFamily r = build_raw(n);
      for (int k = 0; k <= n; ++k) {
        bool listed = false;
        for (const auto& [pk, pj] : a.adjusted_pairs) {
          listed = listed || k == pk || k == pj || k == mirror_index(n, pk) || k == mirror_index(n, pj);
        }
        if (!listed) avg.update(std::abs(a.points[k] - r.points[k]), "unlisted node moved, n = " + std::to_string(n));
      }
    }
    CheckResult x = avg.below(1e-10);
    const bool moves_ok = move.value <= 1e-12;
    return CheckResult{x.pass && moves_ok, x.detail + "; move excess " + num(move.value)};
  }});

  c.push_back({"k1/k2 locator vs brute force", [](const VerifyOptions& o) {
    const int top = scaled(o, 128, 512);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-kEndpointAngle, kEndpointAngle);
    int bad = 0;
    std::string first;
    for (int n = 1; n <= top; ++n) {
      const auto th = theta_grid(n);
      for (int i = 0; i < 1000 * 16 / top + 2; ++i) {
        const double t = u(rng);
        const NearestIndices got = k1_k2_locate(n, t);
        const double at = std::abs(t);
        int b1 = -1;
        int b2 = -1;
        for (int k = 0; k <= n / 2; ++k) {
          const double x = th[k];
          if (x <= kEndpointAngle) {
            if (b1 < 0 || std::abs(x - at) < std::abs(th[b1] - at)) b1 = k;
          } else {
            const double target = unfold(at);
            if (b2 < 0 || std::abs(x - target) < std::abs(th[b2] - target)) b2 = k;
          }
        }
        if (t < 0.0) {
          b1 = mirror_index(n, b1);
          if (b2 >= 0) b2 = mirror_index(n, b2);
        }
        const bool ok = got.k1 == b1 && (b2 < 0 ? !got.k2 : (got.k2 && *got.k2 == b2));
        if (!ok && bad++ == 0) first = "n = " + std::to_string(n) + ", t = " + num(t);
      }
    }
    return CheckResult{bad == 0, std::to_string(bad) + " mismatches" + (first.empty() ? "" : ", first at " + first)};
  }});

  c.push_back({"log |omega| vs direct product", [](const VerifyOptions&) {
    std::mt19937 rng(14);
    Worst e;
    for (int n = 0; n <= 24; ++n) {
      const NodeFamily f = build_raw(n);
      for (int i = 0; i < 100; ++i) {
        const Complex z = random_exterior(rng, 0.0, 3.0);
        double direct = 1.0;
        for (const auto& zk : f.points) direct *= std::abs(z - zk);
        const double viaLog = log_abs_omega(f, z).magnitude();
        e.update(std::abs(viaLog - direct) / direct, "n = " + std::to_string(n));
      }
    }
    return e.below(1e-10);
  }});

  c.push_back({"Lebesgue function: 1 at nodes, >= 1 on the arc", [](const VerifyOptions&) {
    double at_nodes = 0.0;
    double lowest = 1e300;
    for (const int n : {1, 2, 5, 16, 33, 64}) {
      const NodeFamily f = build_adjusted(n);
      const DerivativeTable tab = build_derivative_table(f);
      for (const auto& z : f.points) at_nodes = std::max(at_nodes, std::abs(lebesgue_function(f, tab, z) - 1.0));
      for (int i = 0; i <= 2000; ++i) {
        const double t = -kEndpointAngle + 2.0 * kEndpointAngle * i / 2000.0;
        lowest = std::min(lowest, lebesgue_function(f, tab, boundary_point(t)));
      }
    }
    const bool ok = at_nodes <= 1e-10 && lowest >= 1.0 - 1e-10;
    return CheckResult{ok, "|lambda - 1| at nodes " + num(at_nodes) + ", min on arc " + num(lowest)};
  }});

  c.push_back({"L_0 = 1 exactly", [](const VerifyOptions&) {
    const double v = lebesgue_constant(build_raw(0)).value;
    return CheckResult{v == 1.0, "L_0 = " + num(v)};
  }});

  c.push_back({"node-order independence", [](const VerifyOptions&) {
    std::mt19937 rng(15);
    const NodeFamily f = build_adjusted(40);
    std::vector<Complex> shuffled = f.points;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const DerivativeTable t1 = build_derivative_table(f.points);
    const DerivativeTable t2 = build_derivative_table(shuffled);
    Worst e;
    for (int i = 0; i < 500; ++i) {
      const Complex z = boundary_point(-kEndpointAngle + 2.0 * kEndpointAngle * (i + 0.37) / 500.0);
      const double a = lebesgue_function(f.points, t1, z);
      const double b = lebesgue_function(shuffled, t2, z);
      e.update(std::abs(a - b) / a, "sample " + std::to_string(i));
      e.update(std::abs(log_abs_omega(f.points, z).value - log_abs_omega(shuffled, z).value), "sample " + std::to_string(i));
    }
    return e.below(1e-12);
  }});

  c.push_back({"level-node product containment", [](const VerifyOptions& o) {
    std::vector<int> ns{16, 64, 256};
    if (o.scale == VerifyScale::kFull) ns.push_back(1024);
    double lo = 1e300;
    double hi = 0.0;
    for (const int n : ns) {
      const LevelNodes ln = build_level_nodes(n, RhoConvention::kOneOverN);
      for (int i = 0; i < 1000; ++i) {
        const double t = -kEndpointAngle + 2.0 * kEndpointAngle * (i + 0.5) / 1000.0;
        const double v = log_abs_omega(ln, boundary_point(t)).magnitude();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const double a = std::exp(-3.0) * std::pow(std::exp(1.0) - 1.0, 2);
    const double b = std::exp(5.0) * (1.0 + 2.0 * std::exp(1.0)) / (std::exp(1.0) - 1.0);
    return CheckResult{lo >= a && hi <= b, "range [" + num(lo) + ", " + num(hi) + "] within [" + num(a) + ", " + num(b) + "]"};
  }});

  c.push_back({"surrogate band does not diverge", [](const VerifyOptions& o) {
    std::vector<int> ns{64, 128, 256};
    if (o.scale == VerifyScale::kFull) {
      ns.push_back(512);
      ns.push_back(1024);
    }
    double band_lo = 1e300;
    double band_hi = 0.0;
    std::string bands;
    for (const int n : ns) {
      const NodeFamily raw = build_raw(n);
      const LevelNodes ln = build_level_nodes(n, RhoConvention::kOneOverN);
      double lo = 1e300;
      double hi = 0.0;
      for (int i = 0; i < 2000; ++i) {
        const double t = -kEndpointAngle + 2.0 * kEndpointAngle * (i + 0.5) / 2000.0;
        const double est = asymptotic_omega_estimate(raw, ln, t);
        if (!(est > 0.0)) continue;
        const double r = log_abs_omega(raw, boundary_point(t)).magnitude() / est;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      const double band = hi / lo;
      bands += (bands.empty() ? "" : ", ") + std::to_string(n) + ": " + num(band);
      band_lo = std::min(band_lo, band);
      band_hi = std::max(band_hi, band);
    }
    return CheckResult{band_hi / band_lo < 2.0, "max/min bands {" + bands + "}"};
  }});

  c.push_back({"adjusted L_n <= raw L_n where pairs moved", [](const VerifyOptions& o) {
    const int top = scaled(o, 160, 1024);
    LebesgueSettings s;
    s.grid_per_gap = 16;
    std::vector<int> ns;
    for (int n = 1; n <= top; ++n) {
      if (!build_adjusted(n).adjusted_pairs.empty()) ns.push_back(n);
    }
    std::vector<double> excess(ns.size());
    parallel_for(ns.size(), o.jobs, [&](std::size_t i) {
      excess[i] = lebesgue_constant(build_adjusted(ns[i]), s).value -
                  lebesgue_constant(build_raw(ns[i]), s).value;
    });
    const auto it = std::max_element(excess.begin(), excess.end());
    const bool ok = it == excess.end() || *it <= 0.0;
    return CheckResult{ok, std::to_string(ns.size()) + " triggering n <= " + std::to_string(top) +
                               (it == excess.end() ? "" : ", worst L_adj - L_raw " + num(*it) + " at n = " +
                                                              std::to_string(ns[static_cast<std::size_t>(it - excess.begin())]))};
  }});

  c.push_back({"witness between 1 and L_n", [](const VerifyOptions&) {
    std::string detail;
    bool ok = true;
    for (const int n : {64, 256}) {
      const double w = lower_bound_witness(n).full.value;
      const double l = lebesgue_constant(build_raw(n)).value;
      ok = ok && w >= 1.0 && w <= l;
      detail += "n = " + std::to_string(n) + ": " + num(w) + " <= " + num(l) + "; ";
    }
    return CheckResult{ok, detail};
  }});

  c.push_back({"M_n >= 1 and nondecreasing in window_max", [](const VerifyOptions&) {
    const NodeFamily f = build_raw(32);
    bool ok = true;
    std::string detail;
    for (const WindowMode mode : {WindowMode::kCentered, WindowMode::kAllContiguous}) {
      double prev = 0.0;
      for (const int w : {16, 64, 256}) {
        MuckenhouptSettings s;
        s.window_max = w;
        s.mode = mode;
        const double v = muckenhoupt_constant(f, 2.0, s).value;
        ok = ok && v >= 1.0 - 1e-9 && v >= prev;
        prev = v;
        detail += num(v) + " ";
      }
    }
    return CheckResult{ok, "values " + detail};
  }});

  c.push_back({"grid independence of L_256", [](const VerifyOptions&) {
    const NodeFamily f = build_adjusted(256);
    LebesgueSettings a;
    LebesgueSettings b;
    b.grid_per_gap = 2 * a.grid_per_gap;
    const double la = lebesgue_constant(f, a).value;
    const double lb = lebesgue_constant(f, b).value;
    const double rel = std::abs(la - lb) / la;
    return CheckResult{rel < 1e-3, "relative change " + num(rel)};
  }});

  c.push_back({"level extrema ratio >= 1", [](const VerifyOptions&) {
    bool ok = true;
    std::string detail;
    for (const int n : {8, 16, 64}) {
      const double r = level_minmax(n).ratio;
      ok = ok && r >= 1.0;
      detail += num(r) + " ";
    }
    return CheckResult{ok, "ratios " + detail};
  }});

  c.push_back({"power-law fit recovers synthetic exponent", [](const VerifyOptions&) {
    std::mt19937 rng(16);
    std::normal_distribution<double> noise(0.0, 1e-3);
    std::vector<double> ns;
    std::vector<double> ys;
    for (int k = 4; k <= 12; ++k) {
      const double n = std::ldexp(1.0, k);
      ns.push_back(n);
      ys.push_back(4.5 + 0.37 * std::pow(n, 0.65) + noise(rng));
    }
    const FitResult f = fit_growth(ns, ys, FitModel::kPowerLaw);
    return CheckResult{std::abs(f.beta - 0.65) < 0.05, "beta " + num(f.beta)};
  }});

  c.push_back({"repeat evaluation is bitwise identical", [](const VerifyOptions& o) {
    std::vector<double> a(4);
    std::vector<double> b(4);
    const int ns[] = {40, 64, 100, 128};
    parallel_for(4, 1, [&](std::size_t i) { a[i] = lebesgue_constant(build_adjusted(ns[i])).value; });
    parallel_for(4, std::max(2, o.jobs), [&](std::size_t i) { b[i] = lebesgue_constant(build_adjusted(ns[i])).value; });
    return CheckResult{a == b, a == b ? "identical" : "differs"};
  }});

  return c;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto checks = make_checks();
  int failed = 0;
  for (const auto& chk : checks) {
    CheckResult r;
    try {
      r = chk.run(options);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS  " : "FAIL  ") << chk.name << "  [" << r.detail << "]\n";
  }
  out << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed\n"
                      : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed\n");
  return failed == 0 ? 0 : 1;
}

}  // namespace lshape::experiment
