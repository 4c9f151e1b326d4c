#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lshape/conformal_map.hpp"
#include "lshape/metrics.hpp"
#include "lshape/node_families.hpp"

namespace lshape::experiment {

inline constexpr int kSchemaVersion = 1;

/// Everything a command needs; serialises to JSON and hashes to a cache key.
struct RunConfig {
  std::string command;
  std::vector<int> ns;
  FamilyKind family = FamilyKind::kRaw;
  std::vector<double> ps;
  int grid_per_gap = 64;
  double refine_tol = 1e-10;
  RhoConvention rho = RhoConvention::kOneOverNPlusOne;
  int samples = 0;  // level-curve search samples; 0 = 64 (n + 1)
  int window_step_denom = 128;
  int window_max = 0;  // 0 = default_window_max(n)
  WindowMode window_mode = WindowMode::kCentered;
  double quad_tol = 1e-8;
  std::optional<int> k;  // mzratio node index; default: nearest to the |omega| minimiser
  FitModel model = FitModel::kAffineInLogN;
  std::string input;     // fit input CSV
  std::string column;    // fit response column; empty = schema default
  std::string out;
  std::string cache_dir;
  int jobs = 1;
};

[[nodiscard]] nlohmann::json to_json(const RunConfig& c);

/// Parses "4..12" into {16, 32, ..., 4096}.
[[nodiscard]] std::vector<int> parse_power_sweep(const std::string& text);
/// Parses "16,32,100".
[[nodiscard]] std::vector<int> parse_int_list(const std::string& text);
[[nodiscard]] std::vector<double> parse_double_list(const std::string& text);

[[nodiscard]] RhoConvention parse_rho(const std::string& text);
[[nodiscard]] const char* rho_name(RhoConvention c);

/// 64-bit FNV-1a.
[[nodiscard]] std::uint64_t fnv1a(const std::string& bytes);
[[nodiscard]] std::string hex64(std::uint64_t v);

}  // namespace lshape::experiment
