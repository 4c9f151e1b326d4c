#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "lshape/errors.hpp"
#include "lshape/experiment/commands.hpp"
#include "lshape/experiment/config.hpp"

namespace ex = lshape::experiment;

namespace {

struct RawFlags {
  int n = -1;
  std::string sweep;
  std::string list;
  std::string family = "raw";
  std::string p;
  std::string rho = "n+1";
  std::string window_mode = "centered";
  std::string model = "affine_in_logn";
  int k = -1;
  std::string manifest;
  std::string scale = "quick";
  bool flip_branch = false;
};

void add_common(CLI::App* sub, ex::RunConfig& c, RawFlags& f) {
  sub->add_option("--n", f.n, "Polynomial degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--sweep", f.sweep, "Powers of two k0..k1, e.g. 4..12");
  sub->add_option("--list", f.list, "Comma-separated degrees");
  sub->add_option("--family", f.family, "raw | adjusted")->check(CLI::IsMember({"raw", "adjusted"}));
  sub->add_option("--p", f.p, "Exponent(s), comma-separated");
  sub->add_option("--grid-per-gap", c.grid_per_gap, "Lebesgue samples per node gap")->check(CLI::Range(8, 1 << 20));
  sub->add_option("--refine-tol", c.refine_tol, "Golden-section tolerance (angle)");
  sub->add_option("--rho", f.rho, "Level-curve radius 1 + 1/n or 1 + 1/(n+1)")->check(CLI::IsMember({"n", "n+1"}));
  sub->add_option("--samples", c.samples, "Level-curve search samples (0 = 64(n+1))");
  sub->add_option("--window-step-denom", c.window_step_denom, "A_p step pi/(denom (n+1))")->check(CLI::PositiveNumber);
  sub->add_option("--window-max", c.window_max, "A_p window half-width in steps (0 = automatic)")->check(CLI::NonNegativeNumber);
  sub->add_option("--window-mode", f.window_mode, "centered | all")->check(CLI::IsMember({"centered", "all"}));
  sub->add_option("--quad-tol", c.quad_tol, "Relative quadrature tolerance");
  sub->add_option("--k", f.k, "Node index for mzratio (default: nearest the |omega| minimiser)");
  sub->add_option("--out", c.out, "Output path (default stdout)");
  sub->add_option("--cache-dir", c.cache_dir, "Result cache directory (default $LSHAPE_CACHE_DIR)");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--manifest", f.manifest, "Also write a JSON result set with timings");
}

void finish(ex::RunConfig& c, const RawFlags& f) {
  if (!f.sweep.empty()) c.ns = ex::parse_power_sweep(f.sweep);
  if (!f.list.empty()) {
    const auto more = ex::parse_int_list(f.list);
    c.ns.insert(c.ns.end(), more.begin(), more.end());
  }
  if (f.n >= 0) c.ns.push_back(f.n);
  c.family = lshape::parse_family_kind(f.family.c_str());
  if (!f.p.empty()) c.ps = ex::parse_double_list(f.p);
  c.rho = ex::parse_rho(f.rho);
  c.window_mode = f.window_mode == "all" ? lshape::WindowMode::kAllContiguous : lshape::WindowMode::kCentered;
  c.model = lshape::parse_fit_model(f.model.c_str());
  if (f.k >= 0) c.k = f.k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation experiments on the L-shaped arc"};
  app.require_subcommand(1);

  ex::RunConfig config;
  RawFlags flags;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"nodes", "Dump a node family as JSON"},
      {"lebesgue", "Lebesgue constants as CSV"},
      {"sweep", "Lebesgue constants over a degree sweep, cached per degree"},
      {"minmax", "min / max of |omega| on the level curve"},
      {"apweight", "Muckenhoupt A_p constants"},
      {"mzratio", "Marcinkiewicz-Zygmund ratios R^p_{n,k}"},
  };
  for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help), config, flags);

  auto* fit = app.add_subcommand("fit", "Fit a growth law to a CSV produced by another command");
  fit->add_option("--input", config.input, "Input CSV")->required();
  fit->add_option("--model", flags.model, "affine_in_logn | power_law")
      ->check(CLI::IsMember({"affine_in_logn", "affine", "power_law", "power"}));
  fit->add_option("--column", config.column, "Response column (default L_n, M_n, R or ratio)");
  fit->add_option("--out", config.out, "Output path (default stdout)");

  ex::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--scale", flags.scale, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--flip-branch", flags.flip_branch, "Negative control: use the reflected map");
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    if (config.command == "verify") {
      vopts.scale = flags.scale == "full" ? ex::VerifyScale::kFull : ex::VerifyScale::kQuick;
      vopts.flip_branch = flags.flip_branch;
      return ex::cmd_verify(vopts, std::cout);
    }
    finish(config, flags);
    const ex::CommandOptions opts{flags.manifest};
    if (config.command == "nodes") return ex::cmd_nodes(config, std::cout);
    if (config.command == "lebesgue") return ex::cmd_lebesgue(config, std::cout, opts);
    if (config.command == "sweep") return ex::cmd_sweep(config, std::cout, opts);
    if (config.command == "minmax") return ex::cmd_minmax(config, std::cout, opts);
    if (config.command == "apweight") return ex::cmd_apweight(config, std::cout, opts);
    if (config.command == "mzratio") return ex::cmd_mzratio(config, std::cout, opts);
    if (config.command == "fit") return ex::cmd_fit(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
