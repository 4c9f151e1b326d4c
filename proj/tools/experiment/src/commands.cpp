#include "lshape/experiment/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lshape/errors.hpp"
#include "lshape/experiment/cache.hpp"
#include "lshape/experiment/pool.hpp"
#include "lshape/experiment/records.hpp"

namespace lshape::experiment {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

void emit(const RunConfig& config, std::ostream& fallback, const std::string& text) {
  if (config.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file " + config.out);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + config.out);
}

void emit_manifest(const CommandOptions& opts, const RunConfig& config,
                   const std::vector<TimedRecord>& records) {
  if (opts.manifest.empty()) return;
  std::ofstream f(opts.manifest, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open manifest file " + opts.manifest);
  f << result_set_json(to_json(config), records).dump(2) << '\n';
}

void require_ns(const RunConfig& c) {
  if (c.ns.empty()) throw DomainError(c.command + ": give --n, --sweep or --list");
}

std::vector<double> ps_or(const RunConfig& c, std::vector<double> fallback) {
  return c.ps.empty() ? fallback : c.ps;
}

json base_key(const char* metric, int n, const RunConfig& c) {
  return {{"schema_version", kSchemaVersion}, {"metric", metric}, {"n", n},
          {"family", to_string(c.family)}};
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Cached evaluation of one job producing a list of records.
template <typename Compute>
std::vector<TimedRecord> cached(const ResultCache& cache, const json& key, Compute&& compute) {
  const auto start = Clock::now();
  if (auto hit = cache.load(key)) {
    try {
      std::vector<TimedRecord> out;
      for (const auto& r : hit->at("records")) out.push_back({record_from_json(r), 0.0, true});
      out.front().wall_seconds = seconds_since(start);
      return out;
    } catch (const std::exception& e) {
      std::cerr << "warning: malformed cache value (" << e.what() << "); recomputing\n";
    }
  }
  std::vector<MetricRecord> recs = compute();
  json stored = json::array();
  for (const auto& r : recs) stored.push_back(to_json(r));
  cache.store(key, json{{"records", stored}});
  std::vector<TimedRecord> out;
  for (auto& r : recs) out.push_back({std::move(r), 0.0, false});
  out.front().wall_seconds = seconds_since(start);
  return out;
}

std::vector<TimedRecord> flatten(std::vector<std::vector<TimedRecord>>& parts) {
  std::vector<TimedRecord> all;
  for (auto& p : parts) {
    for (auto& r : p) all.push_back(std::move(r));
  }
  return all;
}

std::string lebesgue_csv(const std::vector<TimedRecord>& recs) {
  std::ostringstream os;
  os << "n,family,L_n,L_over_log,argmax_t,grid_per_gap,refine_tol\n";
  for (const auto& t : recs) {
    const auto& r = t.record;
    const double lol = r.n > 1 ? r.value / std::log(static_cast<double>(r.n)) : NAN;
    os << r.n << ',' << r.family << ',' << fixed6(r.value) << ',' << fixed6(lol) << ','
       << fixed6(r.location.value_or(NAN)) << ',' << r.settings.at("grid_per_gap") << ','
       << r.settings.at("refine_tol") << '\n';
  }
  return os.str();
}

}  // namespace

int cmd_nodes(const RunConfig& config, std::ostream& out) {
  require_ns(config);
  json arr = json::array();
  for (const int n : config.ns) {
    const NodeFamily f = build_family(n, config.family);
    arr.push_back(to_json(f, theta_grid(n)));
  }
  const json doc = arr.size() == 1 ? arr.front() : json{{"schema_version", kSchemaVersion}, {"families", arr}};
  emit(config, out, doc.dump(2) + "\n");
  return 0;
}

int cmd_lebesgue(const RunConfig& config, std::ostream& out, const CommandOptions& opts) {
  require_ns(config);
  const ResultCache cache(ResultCache::resolve_directory(config.cache_dir));
  LebesgueSettings s;
  s.grid_per_gap = config.grid_per_gap;
  s.refine_tol = config.refine_tol;

  std::vector<std::vector<TimedRecord>> parts(config.ns.size());
  parallel_for(config.ns.size(), config.jobs, [&](std::size_t i) {
    const int n = config.ns[i];
    json key = base_key("lebesgue", n, config);
    key["grid_per_gap"] = s.grid_per_gap;
    key["refine_tol"] = s.refine_tol;
    key["refine_candidates"] = s.refine_candidates;
    parts[i] = cached(cache, key, [&] {
      return std::vector<MetricRecord>{lebesgue_constant(build_family(n, config.family), s)};
    });
  });
  const auto recs = flatten(parts);
  emit(config, out, lebesgue_csv(recs));
  emit_manifest(opts, config, recs);
  return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, const CommandOptions& opts) {
  return cmd_lebesgue(config, out, opts);
}

int cmd_minmax(const RunConfig& config, std::ostream& out, const CommandOptions& opts) {
  require_ns(config);
  const ResultCache cache(ResultCache::resolve_directory(config.cache_dir));
  std::vector<std::vector<TimedRecord>> parts(config.ns.size());
  parallel_for(config.ns.size(), config.jobs, [&](std::size_t i) {
    const int n = config.ns[i];
    json key = base_key("level_minmax", n, config);
    key["rho"] = rho_name(config.rho);
    key["samples"] = config.samples;
    parts[i] = cached(cache, key, [&] {
      const LevelExtrema e = level_minmax(build_family(n, config.family), config.rho, config.samples);
      return std::vector<MetricRecord>{e.min, e.max};
    });
  });

  std::ostringstream os;
  os << "n,rho,min,max,ratio\n";
  for (const auto& p : parts) {
    const auto& mn = p.at(0).record;
    const auto& mx = p.at(1).record;
    const double rho = LevelCurve::make(mn.n, config.rho).rho;
    os << mn.n << ',' << fixed6(rho) << ',' << fixed6(mn.value) << ',' << fixed6(mx.value) << ','
       << fixed6(mx.value / mn.value) << '\n';
  }
  const auto recs = flatten(parts);
  emit(config, out, os.str());
  emit_manifest(opts, config, recs);
  return 0;
}

int cmd_apweight(const RunConfig& config, std::ostream& out, const CommandOptions& opts) {
  require_ns(config);
  const std::vector<double> ps = ps_or(config, {2.0});
  const ResultCache cache(ResultCache::resolve_directory(config.cache_dir));
  MuckenhouptSettings s;
  s.step_denom = config.window_step_denom;
  s.window_max = config.window_max;
  s.mode = config.window_mode;
  s.convention = config.rho;
  s.search_samples = config.samples;

  std::vector<std::vector<TimedRecord>> parts(config.ns.size());
  parallel_for(config.ns.size(), config.jobs, [&](std::size_t i) {
    const int n = config.ns[i];
    json key = base_key("muckenhoupt", n, config);
    key["p"] = ps;
    key["step_denom"] = s.step_denom;
    key["window_max"] = s.window_max > 0 ? s.window_max : default_window_max(n);
    key["window_mode"] = s.mode == WindowMode::kCentered ? "centered" : "all";
    key["rho"] = rho_name(s.convention);
    key["samples"] = s.search_samples;
    parts[i] = cached(cache, key, [&] {
      return muckenhoupt_constants(build_family(n, config.family), ps, s);
    });
  });

  const auto recs = flatten(parts);
  std::ostringstream os;
  os << "n,p,M_n,step_denom,window_max\n";
  for (const auto& t : recs) {
    const auto& r = t.record;
    os << r.n << ',' << format_exact(*r.p) << ',' << fixed6(r.value) << ','
       << r.settings.at("step_denom") << ',' << r.settings.at("window_max") << '\n';
  }
  emit(config, out, os.str());
  emit_manifest(opts, config, recs);
  return 0;
}

int cmd_mzratio(const RunConfig& config, std::ostream& out, const CommandOptions& opts) {
  require_ns(config);
  const std::vector<double> ps = ps_or(config, {2.0});
  const ResultCache cache(ResultCache::resolve_directory(config.cache_dir));
  MzSettings s;
  s.quad_tol = config.quad_tol;
  s.convention = config.rho;

  std::vector<std::vector<TimedRecord>> parts(config.ns.size());
  parallel_for(config.ns.size(), config.jobs, [&](std::size_t i) {
    const int n = config.ns[i];
    json key = base_key("mz_ratio", n, config);
    key["p"] = ps;
    key["k"] = config.k ? json(*config.k) : json("near_min");
    key["quad_tol"] = s.quad_tol;
    key["rho"] = rho_name(s.convention);
    key["samples"] = config.samples;
    parts[i] = cached(cache, key, [&] {
      const NodeFamily f = build_family(n, config.family);
      const DerivativeTable table = build_derivative_table(f);
      const int k = config.k ? *config.k : mz_index_near_min(f, s.convention, config.samples);
      if (k < 0 || k > n) throw DomainError("mzratio: --k out of range for n = " + std::to_string(n));
      std::vector<MetricRecord> recs;
      for (const double p : ps) recs.push_back(mz_ratio(f, table, p, k, s));
      return recs;
    });
  });

  const auto recs = flatten(parts);
  std::ostringstream os;
  os << "n,p,k,R,dist\n";
  for (const auto& t : recs) {
    const auto& r = t.record;
    os << r.n << ',' << format_exact(*r.p) << ',' << r.settings.at("k") << ',' << fixed6(r.value)
       << ',' << r.settings.at("dist") << '\n';
  }
  emit(config, out, os.str());
  emit_manifest(opts, config, recs);
  return 0;
}

int cmd_fit(const RunConfig& config, std::ostream& out) {
  if (config.input.empty()) throw DomainError("fit: give --input CSV");
  std::ifstream in(config.input);
  if (!in) throw std::runtime_error("cannot open input file " + config.input);

  std::string line;
  if (!std::getline(in, line)) throw FitError("fit: empty input " + config.input);
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  auto find = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
  };
  const int n_col = find("n");
  int v_col = -1;
  if (!config.column.empty()) {
    v_col = find(config.column);
  } else {
    for (const char* c : {"L_n", "M_n", "R", "ratio"}) {
      if ((v_col = find(c)) >= 0) break;
    }
  }
  if (n_col < 0 || v_col < 0) throw FitError("fit: input lacks an n column or a value column");

  std::vector<double> ns;
  std::vector<double> vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) <= std::max(n_col, v_col)) continue;
    const double n = std::stod(cells[static_cast<std::size_t>(n_col)]);
    if (config.model == FitModel::kAffineInLogN && n <= 1.0) continue;
    ns.push_back(n);
    vs.push_back(std::stod(cells[static_cast<std::size_t>(v_col)]));
  }
  const FitResult fit = fit_growth(ns, vs, config.model);
  emit(config, out, to_json(fit).dump(2) + "\n");
  return 0;
}

}  // namespace lshape::experiment
