// Batch front door for the van der Waals Navier-Stokes/Allen-Cahn harness.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsac/commands.hpp"

namespace {

int dispatch(int argc, char** argv) {
    CLI::App app{"1D Lagrangian Navier-Stokes/Allen-Cahn simulator and verification harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir, run_dir;
    std::vector<double> theta_list{0.85, 0.9, 0.95};
    int n_samples = 512;
    int levels = 3;
    bool allow_unproven = false;

    CLI::App* eos = app.add_subcommand("eos", "isotherm analysis and Maxwell construction");
    eos->add_option("--config", config_path, "configuration file")->required();
    eos->add_option("--out", out_dir, "output directory");
    eos->add_option("--theta", theta_list, "isotherm temperatures");
    eos->add_option("--samples", n_samples, "rows per isotherm file");

    CLI::App* runc = app.add_subcommand("run", "time-integrate the configured problem");
    runc->add_option("--config", config_path, "configuration file")->required();
    runc->add_option("--out", out_dir, "output directory");
    runc->add_flag("--allow-unproven", allow_unproven, "permit beta=0 in NSAC mode");

    CLI::App* check = app.add_subcommand("check", "run every invariant check on a run directory");
    check->add_option("run_dir", run_dir, "run artifact directory")->required();

    CLI::App* conv = app.add_subcommand("converge", "manufactured-solution convergence study");
    conv->add_option("--config", config_path, "configuration file")->required();
    conv->add_option("--out", out_dir, "output directory");
    conv->add_option("--levels", levels, "refinement levels");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return nsac::cmd_check(run_dir);

    nsac::Config cfg = nsac::parse_config(config_path, allow_unproven);
    const std::string out = out_dir.empty() ? cfg.out_dir : out_dir;
    if (eos->parsed()) return nsac::cmd_eos(cfg, theta_list, n_samples, out);
    if (runc->parsed()) return nsac::cmd_run(cfg, out);
    return nsac::cmd_converge(cfg, levels, out);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const nsac::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nsac::MissingArtifacts& e) {
        std::cerr << "artifact error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "abort: " << e.what() << "\n";
        return 3;
    }
}
