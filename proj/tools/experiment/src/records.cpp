#include "lshape/experiment/records.hpp"

#include <cmath>
#include <cstdio>

#include "lshape/experiment/config.hpp"

namespace lshape::experiment {

nlohmann::json to_json(const MetricRecord& r) {
  nlohmann::json j;
  j["metric"] = r.metric;
  j["n"] = r.n;
  j["family"] = r.family;
  j["p"] = r.p ? nlohmann::json(*r.p) : nlohmann::json(nullptr);
  j["value"] = r.value;
  j["location"] = r.location ? nlohmann::json(*r.location) : nlohmann::json(nullptr);
  j["settings"] = r.settings;
  return j;
}

MetricRecord record_from_json(const nlohmann::json& j) {
  MetricRecord r;
  r.metric = j.at("metric").get<std::string>();
  r.n = j.at("n").get<int>();
  r.family = j.at("family").get<std::string>();
  if (!j.at("p").is_null()) r.p = j.at("p").get<double>();
  r.value = j.at("value").get<double>();
  if (!j.at("location").is_null()) r.location = j.at("location").get<double>();
  r.settings = j.at("settings").get<std::map<std::string, std::string>>();
  return r;
}

nlohmann::json to_json(const NodeFamily& f, const std::vector<double>& raw_angles) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = f.n;
  j["family"] = to_string(f.kind);
  j["raw_angles"] = raw_angles;
  j["angles"] = f.angles;
  j["folded"] = f.folded;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& z : f.points) pts.push_back({z.real(), z.imag()});
  j["points"] = pts;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [k, jj] : f.adjusted_pairs) pairs.push_back({k, jj});
  j["adjusted_pairs"] = pairs;
  j["separation_margin"] = f.n == 0 ? nlohmann::json(nullptr) : nlohmann::json(separation_margin(f));
  return j;
}

nlohmann::json to_json(const FitResult& f) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = to_string(f.model);
  j["a"] = f.a;
  j["b"] = f.b;
  j["beta"] = f.model == FitModel::kPowerLaw ? nlohmann::json(f.beta) : nlohmann::json(nullptr);
  j["residual_rms"] = f.residual_rms;
  j["n_range"] = {f.n_min, f.n_max};
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < f.ns.size(); ++i) {
    pts.push_back({{"n", f.ns[i]}, {"observed", f.observed[i]}, {"predicted", f.predicted[i]}});
  }
  j["points"] = pts;
  return j;
}

std::string fixed6(double x) {
  if (!std::isfinite(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

nlohmann::json result_set_json(const nlohmann::json& config, const std::vector<TimedRecord>& records) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& t : records) {
    nlohmann::json r = to_json(t.record);
    r["wall_seconds"] = t.wall_seconds;
    r["from_cache"] = t.from_cache;
    rs.push_back(std::move(r));
  }
  j["records"] = rs;
  return j;
}

}  // namespace lshape::experiment
