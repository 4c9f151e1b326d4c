#pragma once

#include <map>
#include <optional>
#include <string>

namespace lshape {

/// One computed quantity together with every numeric setting that produced it.
struct MetricRecord {
  std::string metric;
  int n = 0;
  std::string family;
  std::optional<double> p;
  double value = 0.0;
  std::optional<double> location;
  std::map<std::string, std::string> settings;
};

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_exact(double x);
[[nodiscard]] std::string format_exact(int x);

}  // namespace lshape
