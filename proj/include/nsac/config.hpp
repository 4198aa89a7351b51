#pragma once

#include <string>

#include "json.hpp"
#include "nsac/diagnostics.hpp"
#include "nsac/solver.hpp"

namespace nsac {

struct Config {
    VdwParams params;
    FarField far;
    Grid1D grid;
    SimConfig sim;
    ProfileSpec profile;
    std::string out_dir = "out";
    DiagnosticsOptions checks;
    nlohmann::ordered_json echo;  // normalized configuration with every effective value
};

// Parses and validates a JSON configuration document. Unknown keys are
// rejected; defaults are filled in and reflected in `echo`. Throws
// ConfigError with the offending key path. force_allow_unproven is the CLI
// override for the beta > 0 guard in NSAC mode.
Config parse_config_json(const nlohmann::json& doc, bool force_allow_unproven = false);
Config parse_config(const std::string& path, bool force_allow_unproven = false);

}  // namespace nsac
