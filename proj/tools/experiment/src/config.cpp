#include "lshape/experiment/config.hpp"

#include <sstream>
#include <stdexcept>

#include "lshape/errors.hpp"

namespace lshape::experiment {

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  j["n"] = c.ns;
  j["family"] = to_string(c.family);
  j["p"] = c.ps;
  j["grid_per_gap"] = c.grid_per_gap;
  j["refine_tol"] = c.refine_tol;
  j["rho"] = rho_name(c.rho);
  j["samples"] = c.samples;
  j["window_step_denom"] = c.window_step_denom;
  j["window_max"] = c.window_max;
  j["window_mode"] = c.window_mode == WindowMode::kCentered ? "centered" : "all";
  j["quad_tol"] = c.quad_tol;
  j["k"] = c.k ? nlohmann::json(*c.k) : nlohmann::json(nullptr);
  j["model"] = to_string(c.model);
  j["input"] = c.input;
  j["column"] = c.column;
  return j;
}

std::vector<int> parse_power_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw DomainError("sweep must look like k0..k1: " + text);
  const int k0 = std::stoi(text.substr(0, dots));
  const int k1 = std::stoi(text.substr(dots + 2));
  if (k0 < 0 || k1 < k0 || k1 > 24) throw DomainError("sweep exponents out of range: " + text);
  std::vector<int> ns;
  for (int k = k0; k <= k1; ++k) ns.push_back(1 << k);
  return ns;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size() || v < 0) throw DomainError("bad integer in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty list: " + text);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw DomainError("bad number in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty list: " + text);
  return out;
}

RhoConvention parse_rho(const std::string& text) {
  if (text == "n") return RhoConvention::kOneOverN;
  if (text == "n+1") return RhoConvention::kOneOverNPlusOne;
  throw DomainError("--rho must be n or n+1, got " + text);
}

const char* rho_name(RhoConvention c) { return c == RhoConvention::kOneOverN ? "n" : "n+1"; }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

}  // namespace lshape::experiment
