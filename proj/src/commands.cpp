#include "nsac/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "nsac/csvio.hpp"
#include "nsac/util.hpp"

namespace fs = std::filesystem;

namespace nsac {

namespace {

std::string snapshot_filename(int step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snap_%08d.csv", step);
    return buf;
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << doc.dump(2) << "\n";
}

nlohmann::json read_json(const std::string& path, const char* what) {
    std::ifstream f(path);
    if (!f) throw MissingArtifacts(std::string("missing ") + what + ": " + path);
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw MissingArtifacts(std::string("unreadable ") + what + ": " + e.what());
    }
}

}  // namespace

int cmd_eos(const Config& cfg, const std::vector<double>& theta_list, int n_samples,
            const std::string& out_dir) {
    if (n_samples < 2) throw ConfigError("eos: samples must be at least 2");
    fs::create_directories(out_dir);
    const VdwParams& p = cfg.params;
    const CriticalPoint cp = critical_point(p);
    std::cout << "critical point: theta_c=" << format_g17(cp.theta_c)
              << " v_c=" << format_g17(cp.v_c) << " p_c=" << format_g17(cp.p_c) << "\n";

    std::ofstream analysis(fs::path(out_dir) / "analysis.csv");
    analysis << "theta,v_alpha,v_beta,v_star,v_sup,p_eq,status\n";

    for (double theta : theta_list) {
        // isotherm samples, geometric spacing from just above the cutoff
        char name[64];
        std::snprintf(name, sizeof(name), "isotherm_%g.csv", theta);
        std::ofstream iso(fs::path(out_dir) / name);
        iso << "v,p,dp_dv\n";
        const double v_lo = p.b + 1.5 * p.h;
        const double v_hi = 12.0 * p.b;
        for (int i = 0; i < n_samples; ++i) {
            const double v = v_lo * std::pow(v_hi / v_lo, double(i) / (n_samples - 1));
            iso << format_g17(v) << ',' << format_g17(pressure(p, v, theta)) << ','
                << format_g17(pressure_derivatives(p, v, theta).dp_dv) << "\n";
        }

        try {
            const IsothermAnalysis a = maxwell_construction(p, theta);
            analysis << format_g17(theta) << ',' << format_g17(a.v_alpha) << ','
                     << format_g17(a.v_beta) << ',' << format_g17(a.v_star) << ','
                     << format_g17(a.v_sup) << ',' << format_g17(a.p_eq) << ",ok\n";
        } catch (const NoSpinodal&) {
            analysis << format_g17(theta) << ",,,,,,NoSpinodal\n";
        } catch (const CutoffConflict&) {
            analysis << format_g17(theta) << ",,,,,,CutoffConflict\n";
        } catch (const NoPositiveEquilibrium&) {
            analysis << format_g17(theta) << ",,,,,,NoPositiveEquilibrium\n";
        }
    }
    return 0;
}

int cmd_run(const Config& cfg, const std::string& out_dir) {
    fs::create_directories(out_dir);
    write_json(fs::path(out_dir) / "config_echo.json", cfg.echo);

    const State initial = init_state(cfg.params, cfg.grid, cfg.far, cfg.profile);
    Forcing forcing;
    const Forcing* fptr = nullptr;
    if (cfg.profile.kind == ProfileSpec::Kind::manufactured) {
        MmsProblem mms;
        mms.params = cfg.params;
        mms.far = cfg.far;
        mms.k = cfg.profile.k;
        forcing = mms.forcing();
        fptr = &forcing;
    }
    const RunResult res = run(cfg.params, cfg.far, initial, cfg.sim, fptr);

    for (const Snapshot& snap : res.snapshots)
        write_snapshot_csv(fs::path(out_dir) / snapshot_filename(snap.step), snap);
    write_series_csv(fs::path(out_dir) / "series.csv", res.series);

    nlohmann::ordered_json report;
    report["run"] = {{"completed", !res.abort.has_value()},
                     {"steps", res.steps},
                     {"dt", cfg.sim.dt},
                     {"t_end", cfg.sim.t_end},
                     {"n", cfg.grid.n},
                     {"e0", res.e0},
                     {"mass0", res.mass0},
                     {"far_field_deviation", res.far_field_deviation},
                     {"picard_max_iterations", res.picard_max_iterations}};
    if (res.abort) {
        report["run"]["abort"] = {{"reason", res.abort->reason},
                                  {"step", res.abort->step},
                                  {"time", res.abort->time},
                                  {"node", res.abort->node}};
    } else {
        report["run"]["abort"] = nullptr;
    }
    write_json(fs::path(out_dir) / "report.json", report);

    if (res.abort) {
        std::cerr << "run aborted at step " << res.abort->step << ": " << res.abort->reason
                  << "\n";
        return 3;
    }
    std::cout << "run completed: " << res.steps << " steps, artifacts in " << out_dir << "\n";
    return 0;
}

int cmd_check(const std::string& run_dir) {
    const fs::path dir(run_dir);
    if (!fs::is_directory(dir)) throw MissingArtifacts("run directory not found: " + run_dir);
    const Config cfg = [&] {
        const nlohmann::json echo = read_json(dir / "config_echo.json", "config echo");
        try {
            return parse_config_json(echo);
        } catch (const ConfigError& e) {
            throw MissingArtifacts(std::string("config echo invalid: ") + e.what());
        }
    }();
    nlohmann::json report = read_json(dir / "report.json", "report");
    if (!report.contains("run")) throw MissingArtifacts("report.json lacks the run section");

    RunResult res;
    res.e0 = report["run"].value("e0", 0.0);
    res.mass0 = report["run"].value("mass0", 0.0);
    res.series = read_series_csv(dir / "series.csv");

    std::vector<std::pair<int, fs::path>> snap_paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("snap_", 0) == 0 && name.size() >= 13 && entry.path().extension() == ".csv")
            snap_paths.emplace_back(std::atoi(name.substr(5, 8).c_str()), entry.path());
    }
    if (snap_paths.empty()) throw MissingArtifacts("no snapshot files in " + run_dir);
    std::sort(snap_paths.begin(), snap_paths.end());
    for (const auto& [step, path] : snap_paths)
        res.snapshots.push_back(read_snapshot_csv(path, step, cfg.sim.dt));

    const DiagnosticsReport diag =
        run_all_checks(cfg.params, cfg.far, res, cfg.sim.dt, cfg.checks);
    for (const CheckResult& c : diag.checks)
        std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name
                  << " (margin " << format_g17(c.worst_margin) << ")\n";

    nlohmann::ordered_json updated;
    updated["run"] = report["run"];
    updated["checks"] = diag.to_json();
    write_json(dir / "report.json", updated);
    return diag.all_ok() ? 0 : 1;
}

namespace {

double mms_error(const MmsProblem& mms, const State& s) {
    const State exact = mms.exact_state(s.grid, s.t);
    auto err = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
        return l2_norm(d, s.grid.dx);
    };
    return std::max({err(s.v, exact.v), err(s.u, exact.u), err(s.theta, exact.theta),
                     err(s.chi, exact.chi)});
}

double max_energy_defect(const RunResult& res, double dt) {
    double dissipated = 0.0, worst = 0.0;
    for (const SeriesRow& row : res.series) {
        dissipated += row.V * dt;
        worst = std::max(worst, std::abs(row.e_total + dissipated - res.e0));
    }
    return worst;
}

}  // namespace

int cmd_converge(const Config& cfg, int levels, const std::string& out_dir) {
    if (levels < 2) throw ConfigError("converge: levels must be at least 2");
    fs::create_directories(out_dir);

    MmsProblem mms;
    mms.params = cfg.params;
    mms.far = cfg.far;
    mms.k = cfg.profile.k;
    const Forcing forcing = mms.forcing();

    SimConfig base = cfg.sim;
    base.mode = Mode::nsac;  // the manufactured residuals are for the full system
    base.output_every = 1 << 30;

    std::ofstream table(fs::path(out_dir) / "convergence.csv");
    table << "ladder,level,n,dt,error,observed_order,defect_max,defect_ratio\n";

    auto run_level = [&](int n, double dt, bool forced) {
        const Grid1D grid = Grid1D::make(cfg.grid.x_min, cfg.grid.x_max, n);
        SimConfig sim = base;
        sim.dt = dt;
        const State initial = mms.exact_state(grid, 0.0);
        RunResult res = run(cfg.params, cfg.far, initial, sim, forced ? &forcing : nullptr);
        if (res.abort) throw Error("converge: level run aborted: " + res.abort->reason);
        Snapshot& last = res.snapshots.back();
        return std::make_pair(mms_error(mms, last.state), max_energy_defect(res, dt));
    };

    // spatial ladder: dt ~ dx^2 so the first-order time error refines at the
    // same rate as the second-order space error
    double spatial_order = 0.0;
    {
        double prev_err = 0.0;
        for (int j = 0; j < levels; ++j) {
            const int n = (cfg.grid.n - 1) * (1 << j) + 1;
            const double dt = cfg.sim.dt / std::pow(4.0, j);
            const auto [err, defect] = run_level(n, dt, true);
            (void)defect;
            double order = 0.0;
            if (j > 0) {
                order = std::log2(prev_err / err);
                spatial_order = order;
            }
            table << "spatial," << j << ',' << n << ',' << format_g17(dt) << ','
                  << format_g17(err) << ',' << format_g17(order) << ",,\n";
            prev_err = err;
        }
    }

    // temporal ladder: fixed fine grid, dt halving
    double temporal_order = 0.0;
    {
        const int n = (cfg.grid.n - 1) * (1 << (levels - 1)) + 1;
        double prev_err = 0.0;
        for (int j = 0; j < levels; ++j) {
            const double dt = cfg.sim.dt / std::pow(2.0, j);
            const auto [err, defect] = run_level(n, dt, true);
            (void)defect;
            double order = 0.0;
            if (j > 0) {
                order = std::log2(prev_err / err);
                temporal_order = order;
            }
            table << "temporal," << j << ',' << n << ',' << format_g17(dt) << ','
                  << format_g17(err) << ',' << format_g17(order) << ",,\n";
            prev_err = err;
        }
    }

    // energy-defect ladder: unforced smooth perturbation, dt ~ dx
    std::vector<double> defect_ratios;
    {
        double prev_defect = 0.0;
        for (int j = 0; j < levels; ++j) {
            const int n = (cfg.grid.n - 1) * (1 << j) + 1;
            const double dt = cfg.sim.dt / std::pow(2.0, j);
            const auto [err, defect] = run_level(n, dt, false);
            (void)err;
            double ratio = 0.0;
            if (j > 0) {
                ratio = prev_defect / defect;
                defect_ratios.push_back(ratio);
            }
            table << "defect," << j << ',' << n << ',' << format_g17(dt) << ",,,"
                  << format_g17(defect) << ',' << (j > 0 ? format_g17(ratio) : "") << "\n";
            prev_defect = defect;
        }
    }

    std::cout << "spatial order: " << format_g17(spatial_order) << "\n";
    std::cout << "temporal order: " << format_g17(temporal_order) << "\n";
    std::cout << "defect ratios per doubling:";
    for (double r : defect_ratios) std::cout << ' ' << format_g17(r);
    std::cout << "\n";
    return 0;
}

}  // namespace nsac
