#pragma once

// Fejer-type node families on the arc. Indices 0..m (m = floor(n/2)) carry
// the nonnegative angles; index k > m mirrors index 2m + 1 - k.

#include <optional>
#include <utility>
#include <vector>

#include "lshape/conformal_map.hpp"
#include "lshape/numeric.hpp"

namespace lshape {

enum class FamilyKind { kRaw, kAdjusted };

[[nodiscard]] const char* to_string(FamilyKind kind);
/// Parses "raw" / "adjusted"; DomainError otherwise.
[[nodiscard]] FamilyKind parse_family_kind(const char* text);

struct NodeFamily {
  int n = 0;
  FamilyKind kind = FamilyKind::kRaw;
  std::vector<double> angles;   // unit-circle preimages, in (-pi, pi]
  std::vector<double> folded;   // representatives in [-2pi/3, 2pi/3]
  std::vector<Complex> points;  // nodes on the arc
  std::vector<std::pair<int, int>> adjusted_pairs;  // (k, j): k in (2pi/3, pi), j its fold-sister
};

struct LevelNodes {
  int n = 0;
  LevelCurve curve;
  std::vector<Complex> points;  // psi(rho e^{i theta_k})
};

[[nodiscard]] int mirror_index(int n, int k);

/// theta_{n,k}: 2k pi/(n+1) for even n, (2k+1) pi/(n+1) for odd n, mirrored.
[[nodiscard]] std::vector<double> theta_grid(int n);

[[nodiscard]] NodeFamily build_raw(int n);

/// Pushes every fold-sister pair closer than 2pi/(3(n+1)) apart to exactly
/// that distance while keeping the pair average. Throws NumericError if a
/// pushed target leaves [0, 2pi/3] or the result is not separated.
[[nodiscard]] NodeFamily build_adjusted(int n);

[[nodiscard]] NodeFamily build_family(int n, FamilyKind kind);

/// (n+1) times the smallest gap between folded angles; +inf for n = 0.
[[nodiscard]] double separation_margin(const NodeFamily& family);

struct NearestIndices {
  int k1 = 0;                 // nearest grid angle on the short side
  std::optional<int> k2;      // nearest grid angle in (2pi/3, pi] to unfold(t)
};

/// For t in [-2pi/3, 2pi/3]; negative t uses the mirror rule.
[[nodiscard]] NearestIndices k1_k2_locate(int n, double t);

[[nodiscard]] LevelNodes build_level_nodes(
    int n, RhoConvention convention = RhoConvention::kOneOverNPlusOne);

/// The other unit-circle angle mapped to the same arc point as theta, or
/// nothing if theta maps to an endpoint or the corner.
[[nodiscard]] std::optional<double> fold_sister(double theta);

}  // namespace lshape
