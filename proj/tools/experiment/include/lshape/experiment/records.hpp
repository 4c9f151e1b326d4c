#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lshape/metrics.hpp"

namespace lshape::experiment {

[[nodiscard]] nlohmann::json to_json(const MetricRecord& r);
[[nodiscard]] MetricRecord record_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const NodeFamily& f, const std::vector<double>& raw_angles);
[[nodiscard]] nlohmann::json to_json(const FitResult& f);

/// Fixed six-decimal rendering used by every CSV column.
[[nodiscard]] std::string fixed6(double x);

/// A record plus the wall-clock time spent producing it.
struct TimedRecord {
  MetricRecord record;
  double wall_seconds = 0.0;
  bool from_cache = false;
};

/// Result set: config echo plus records; written by --manifest.
[[nodiscard]] nlohmann::json result_set_json(const nlohmann::json& config,
                                             const std::vector<TimedRecord>& records);

}  // namespace lshape::experiment
