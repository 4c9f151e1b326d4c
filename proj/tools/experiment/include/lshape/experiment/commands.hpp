#pragma once

#include <iosfwd>
#include <string>

#include "lshape/experiment/config.hpp"

namespace lshape::experiment {

struct CommandOptions {
  std::string manifest;  // optional result-set JSON with timings
};

/// Each command writes its primary output to config.out (or `out` when
/// config.out is empty) and returns a process exit status.
int cmd_nodes(const RunConfig& config, std::ostream& out);
int cmd_lebesgue(const RunConfig& config, std::ostream& out, const CommandOptions& opts = {});
int cmd_sweep(const RunConfig& config, std::ostream& out, const CommandOptions& opts = {});
int cmd_minmax(const RunConfig& config, std::ostream& out, const CommandOptions& opts = {});
int cmd_apweight(const RunConfig& config, std::ostream& out, const CommandOptions& opts = {});
int cmd_mzratio(const RunConfig& config, std::ostream& out, const CommandOptions& opts = {});
int cmd_fit(const RunConfig& config, std::ostream& out);

enum class VerifyScale { kQuick, kFull };

struct VerifyOptions {
  VerifyScale scale = VerifyScale::kQuick;
  bool flip_branch = false;  // negative control: evaluate with the reflected map
  int jobs = 1;
};

/// Runs the invariant suite, prints one line per check, returns 0 iff all pass.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace lshape::experiment
