#pragma once

#include <string>
#include <vector>

#include "nsac/config.hpp"

namespace nsac {

// CLI subcommand bodies; each returns the process exit code
// (0 success, 1 invariant failure, 2 config/artifact error, 3 runtime abort).

int cmd_eos(const Config& cfg, const std::vector<double>& theta_list, int n_samples,
            const std::string& out_dir);
int cmd_run(const Config& cfg, const std::string& out_dir);
int cmd_check(const std::string& run_dir);
int cmd_converge(const Config& cfg, int levels, const std::string& out_dir);

}  // namespace nsac
