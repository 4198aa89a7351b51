#include "nsac/run.hpp"

#include <algorithm>
#include <cmath>

#include "nsac/util.hpp"

namespace nsac {

std::pair<double, double> ns_monitors(const FarField& far, const State& s) {
    const double dx = s.grid.dx;
    const int n = s.n();
    const double m_v = 1.0 + *std::max_element(s.v.begin(), s.v.end());
    const std::vector<double> u_x = gradient(s.u, dx);
    const std::vector<double> theta_x = gradient(s.theta, dx);
    std::vector<double> kin(n), diss(n);
    for (int i = 0; i < n; ++i) {
        kin[i] = s.u[i] * s.u[i] / (2.0 * far.theta_bar);
        diss[i] = theta_x[i] * theta_x[i] / (s.v[i] * s.theta[i] * s.theta[i]) +
                  u_x[i] * u_x[i] / (s.v[i] * s.theta[i]);
    }
    const double tilde_v = trapz(kin, dx) + trapz(diss, dx) + 1.0;
    return {m_v, tilde_v};
}

SeriesRow make_series_row(const VdwParams& par, const FarField& far, const State& s,
                          const std::vector<double>& mu) {
    const EnergyReport er = energy_report(par, far, s, mu);
    SeriesRow row{};
    row.t = s.t;
    row.e_kin = er.e_kinetic;
    row.e_W = er.e_interface;
    row.e_phi = er.e_phi;
    row.e_psi = er.e_psi;
    row.e_total = er.e_total;
    row.V = er.dissipation_v;
    row.mass = er.mass_integral;
    row.min_v = *std::min_element(s.v.begin(), s.v.end());
    row.max_v = *std::max_element(s.v.begin(), s.v.end());
    row.min_theta = *std::min_element(s.theta.begin(), s.theta.end());
    row.max_theta = *std::max_element(s.theta.begin(), s.theta.end());
    double mc = 0.0;
    for (double c : s.chi) mc = std::max(mc, std::abs(c));
    row.max_abs_chi = mc;
    const auto [m_v, tilde_v] = ns_monitors(far, s);
    row.m_v = m_v;
    row.tilde_v = tilde_v;
    return row;
}

namespace {

double boundary_deviation(const FarField& far, const State& s, double chi_left, double chi_right) {
    const int n = s.n();
    const int outer = std::max(1, n / 10);
    double dev = 0.0;
    for (int i = 0; i < outer; ++i) {
        dev = std::max({dev, std::abs(s.v[i] - far.v_bar) / far.v_bar, std::abs(s.u[i]),
                        std::abs(s.theta[i] - far.theta_bar) / far.theta_bar,
                        std::abs(s.chi[i] - chi_left)});
        const int j = n - 1 - i;
        dev = std::max({dev, std::abs(s.v[j] - far.v_bar) / far.v_bar, std::abs(s.u[j]),
                        std::abs(s.theta[j] - far.theta_bar) / far.theta_bar,
                        std::abs(s.chi[j] - chi_right)});
    }
    return dev;
}

}  // namespace

RunResult run(const VdwParams& par, const FarField& far, const State& initial,
              const SimConfig& cfg, const Forcing* forcing) {
    cfg.validate();
    if (cfg.mode == Mode::nsac && !(par.beta > 0.0) && !cfg.allow_unproven)
        throw ConfigError(
            "NSAC mode requires beta > 0; set allow_unproven to run outside the proven regime");
    validate_state(par, initial);

    RunResult res;
    const int n_steps = static_cast<int>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    State s = initial;
    std::vector<double> mu = (cfg.mode == Mode::nsac) ? chemical_potential(par, s)
                                                      : std::vector<double>(s.n(), 0.0);
    const double chi_left = s.chi.front(), chi_right = s.chi.back();
    {
        const EnergyReport er = energy_report(par, far, s, mu);
        res.e0 = er.e_total;
        res.mass0 = er.mass_integral;
    }
    res.snapshots.push_back({0, s, mu});
    res.far_field_deviation = boundary_deviation(far, s, chi_left, chi_right);

    for (int step = 1; step <= n_steps; ++step) {
        try {
            if (cfg.stepper == StepperKind::imex) {
                s = step_imex(par, far, s, cfg, forcing);
            } else {
                auto [next, rep] = picard_step(par, far, s, cfg, forcing);
                s = std::move(next);
                res.picard_max_iterations = std::max(res.picard_max_iterations, rep.iterations);
            }
        } catch (const SolverAbort& e) {
            res.abort = AbortRecord{e.what(), step, e.time, e.node};
            return res;
        }
        s.t = initial.t + step * cfg.dt;
        mu = (cfg.mode == Mode::nsac) ? chemical_potential(par, s)
                                      : std::vector<double>(s.n(), 0.0);
        res.series.push_back(make_series_row(par, far, s, mu));
        res.steps = step;
        res.far_field_deviation =
            std::max(res.far_field_deviation, boundary_deviation(far, s, chi_left, chi_right));
        if (step % cfg.output_every == 0 || step == n_steps)
            res.snapshots.push_back({step, s, mu});
    }
    return res;
}

}  // namespace nsac
