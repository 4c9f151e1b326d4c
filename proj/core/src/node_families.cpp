#include "lshape/node_families.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "lshape/corner_fold.hpp"
#include "lshape/errors.hpp"

namespace lshape {
namespace {

constexpr double kSideSlack = 1e-14;

bool on_short_side(double theta) { return std::abs(theta) <= kEndpointAngle; }

double grid_angle(int n, int k) {
  const double num = (n % 2 == 0) ? 2.0 * k : 2.0 * k + 1.0;
  double t = num * kPi / (n + 1.0);
  if (std::abs(t - kEndpointAngle) < kSideSlack) t = kEndpointAngle;
  return t;
}

void finish_family(NodeFamily& f) {
  f.folded.resize(f.angles.size());
  f.points.resize(f.angles.size());
  for (std::size_t k = 0; k < f.angles.size(); ++k) {
    f.folded[k] = fold_angle(f.angles[k]);
    f.points[k] = boundary_point(f.angles[k]);
  }
}

int nearest_on_grid(int n, double t, int lo, int hi) {
  // Closed-form guess, then compare neighbours; ties go to the smaller index.
  const double step = kTwoPi / (n + 1.0);
  const double offset = (n % 2 == 0) ? 0.0 : 0.5;
  const int guess = static_cast<int>(std::floor(t / step - offset + 0.5));
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = guess - 1; c <= guess + 1; ++c) {
    const int k = std::clamp(c, lo, hi);
    const double d = std::abs(grid_angle(n, k) - t);
    if (d < best_d || (d == best_d && k < best)) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

int last_short_index(int n) {
  const int m = n / 2;
  int hi = std::min(m, static_cast<int>(std::floor(kEndpointAngle / (kTwoPi / (n + 1.0)))) + 1);
  while (hi > 0 && !on_short_side(grid_angle(n, hi))) --hi;
  return hi;
}

}  // namespace

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::kRaw ? "raw" : "adjusted";
}

FamilyKind parse_family_kind(const char* text) {
  if (std::strcmp(text, "raw") == 0) return FamilyKind::kRaw;
  if (std::strcmp(text, "adjusted") == 0) return FamilyKind::kAdjusted;
  throw DomainError(std::string("unknown family kind: ") + text);
}

int mirror_index(int n, int k) {
  const int m = n / 2;
  if (k <= m) {
    const int other = 2 * m + 1 - k;
    return other <= n ? other : k;
  }
  return 2 * m + 1 - k;
}

std::vector<double> theta_grid(int n) {
  if (n < 0) throw DomainError("theta_grid: n must be >= 0");
  const int m = n / 2;
  std::vector<double> th(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= m; ++k) th[k] = grid_angle(n, k);
  for (int k = m + 1; k <= n; ++k) th[k] = -th[2 * m + 1 - k];
  return th;
}

NodeFamily build_raw(int n) {
  NodeFamily f;
  f.n = n;
  f.kind = FamilyKind::kRaw;
  f.angles = theta_grid(n);
  finish_family(f);
  return f;
}

NodeFamily build_adjusted(int n) {
  NodeFamily f;
  f.n = n;
  f.kind = FamilyKind::kAdjusted;
  f.angles = theta_grid(n);
  const std::vector<double> raw = f.angles;
  const int m = n / 2;
  const double d = kEndpointAngle / (n + 1.0);
  const int short_hi = last_short_index(n);

  for (int k = 0; k <= m; ++k) {
    const double tk = raw[k];
    if (on_short_side(tk)) continue;
    const double jk = fold_closed_form(tk);
    const int j = nearest_on_grid(n, jk, 0, short_hi);
    const double tj = raw[j];
    if (!(std::abs(jk - tj) < d)) continue;

    const double target = tj < jk ? tj + d : tj - d;
    if (target < 0.0 || target > kEndpointAngle) {
      throw NumericError("build_adjusted: pushed target leaves [0, 2pi/3] for n = " +
                             std::to_string(n) + ", pair (" + std::to_string(k) + ", " +
                             std::to_string(j) + ")",
                         target);
    }
    const double new_tk = unfold(target);
    f.angles[k] = new_tk;
    f.angles[j] = tj + jk - fold_closed_form(new_tk);
    f.adjusted_pairs.emplace_back(k, j);
  }
  for (int k = m + 1; k <= n; ++k) f.angles[k] = -f.angles[2 * m + 1 - k];
  finish_family(f);

  const double margin = separation_margin(f);
  if (margin < 2.0 * kPi / 3.0 - 1e-12 * (n + 1.0)) {
    throw NumericError("build_adjusted: separation violated for n = " + std::to_string(n),
                       margin);
  }
  return f;
}

NodeFamily build_family(int n, FamilyKind kind) {
  return kind == FamilyKind::kRaw ? build_raw(n) : build_adjusted(n);
}

double separation_margin(const NodeFamily& family) {
  if (family.folded.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> s = family.folded;
  std::sort(s.begin(), s.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
  return (family.n + 1.0) * gap;
}

NearestIndices k1_k2_locate(int n, double t) {
  if (n < 0) throw DomainError("k1_k2_locate: n must be >= 0");
  if (!(std::abs(t) <= kEndpointAngle + 1e-12)) {
    throw DomainError("k1_k2_locate: t must lie in [-2pi/3, 2pi/3]");
  }
  const double at = std::min(std::abs(t), kEndpointAngle);
  const int m = n / 2;
  const int short_hi = last_short_index(n);

  NearestIndices out;
  out.k1 = nearest_on_grid(n, at, 0, short_hi);
  if (short_hi < m) {
    out.k2 = nearest_on_grid(n, unfold(at), short_hi + 1, m);
  }
  if (t < 0.0) {
    out.k1 = mirror_index(n, out.k1);
    if (out.k2) out.k2 = mirror_index(n, *out.k2);
  }
  return out;
}

LevelNodes build_level_nodes(int n, RhoConvention convention) {
  LevelNodes ln;
  ln.n = n;
  ln.curve = LevelCurve::make(n, convention);
  const auto th = theta_grid(n);
  ln.points.reserve(th.size());
  for (const double t : th) ln.points.push_back(level_point(ln.curve, t));
  return ln;
}

std::optional<double> fold_sister(double theta) {
  const double a = std::abs(theta);
  if (a == 0.0 || a >= kPi || a == kEndpointAngle) return std::nullopt;
  const double s = a < kEndpointAngle ? unfold(a) : fold_closed_form(a);
  return theta < 0.0 ? -s : s;
}

}  // namespace lshape
