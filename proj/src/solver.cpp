#include "nsac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsac/tridiag.hpp"
#include "nsac/util.hpp"

namespace nsac {

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("time.dt must be positive");
    if (!(t_end > 0.0)) throw ConfigError("time.t_end must be positive");
    if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("time.cfl must lie in (0, 1)");
    if (!(picard_tol > 0.0)) throw ConfigError("time.picard_tol must be positive");
    if (picard_max_iter < 1) throw ConfigError("time.picard_max_iter must be at least 1");
    if (output_every < 1) throw ConfigError("output.output_every must be at least 1");
}

double max_characteristic_speed(const VdwParams& par, const State& s) {
    double m = 0.0;
    for (int i = 0; i < s.n(); ++i) {
        const PressureDerivatives d = pressure_derivatives(par, s.v[i], s.theta[i]);
        const double c = std::sqrt(std::max(0.0, -d.dp_dv) * s.v[i]);
        m = std::max(m, std::abs(s.u[i]) + c);
    }
    return m;
}

namespace {

void check_cfl(const VdwParams& par, const State& s, const SimConfig& cfg) {
    const double speed = max_characteristic_speed(par, s);
    if (cfg.dt * speed > cfg.cfl * s.grid.dx)
        throw CflViolation("dt exceeds cfl*dx/max(|u|+c), max speed " + std::to_string(speed),
                           s.t, -1);
}

// Solves (x_i - base_i)/dt - D_x(coef_half * x_x)_i = rhs_explicit_i on the
// interior with Dirichlet values from `base` at both ends. coef_half[i] is
// the diffusion coefficient at the half node i+1/2.
std::vector<double> implicit_diffusion_solve(const std::vector<double>& base,
                                             const std::vector<double>& coef_half,
                                             const std::vector<double>& rhs_explicit, double dt,
                                             double dx) {
    const int n = static_cast<int>(base.size());
    const int m = n - 2;
    const double r = dt / (dx * dx);
    std::vector<double> lower(m - 1), diag(m), upper(m - 1), rhs(m);
    for (int i = 1; i <= m; ++i) {
        const double cl = r * coef_half[i - 1];
        const double cr = r * coef_half[i];
        diag[i - 1] = 1.0 + cl + cr;
        if (i > 1) lower[i - 2] = -cl;
        if (i < m) upper[i - 1] = -cr;
        rhs[i - 1] = base[i] + dt * rhs_explicit[i];
    }
    rhs[0] += r * coef_half[0] * base[0];
    rhs[m - 1] += r * coef_half[m] * base[n - 1];
    const std::vector<double> sol = solve_tridiagonal(lower, diag, upper, rhs);
    std::vector<double> out(n);
    out[0] = base[0];
    out[n - 1] = base[n - 1];
    for (int i = 0; i < m; ++i) out[i + 1] = sol[i];
    return out;
}

// One frozen-coefficient pass of the linearized slab problem: coefficients
// and explicit sources come from `coef`, the time increment starts at `base`.
State linearized_pass(const VdwParams& par, const State& base, const State& coef, Mode mode,
                      double dt, const Forcing* forcing) {
    const int n = base.n();
    const double dx = base.grid.dx;
    const double t_new = base.t + dt;
    const double eps = par.epsilon;

    const std::vector<double> u_x = gradient(coef.u, dx);
    const std::vector<double> v_x = gradient(coef.v, dx);
    const std::vector<double> chi_x = gradient(coef.chi, dx);
    std::vector<double> p_node(n);
    for (int i = 0; i < n; ++i) p_node[i] = pressure(par, coef.v[i], coef.theta[i]);
    std::vector<double> mu(n, 0.0);
    if (mode == Mode::nsac) mu = chemical_potential(par, coef);

    // momentum: implicit (u_x/v)_x, explicit pressure gradient and capillary flux
    std::vector<double> half_u(n - 1), g1(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) half_u[i] = 2.0 / (coef.v[i] + coef.v[i + 1]);
    std::vector<double> cap(n, 0.0);
    if (mode == Mode::nsac)
        for (int i = 0; i < n; ++i)
            cap[i] = 0.5 * eps * chi_x[i] * chi_x[i] / (coef.v[i] * coef.v[i]);
    const double inv2dx = 1.0 / (2.0 * dx);
    for (int i = 1; i + 1 < n; ++i) {
        g1[i] = -(cap[i + 1] - cap[i - 1]) * inv2dx - (p_node[i + 1] - p_node[i - 1]) * inv2dx;
        if (forcing) g1[i] += forcing->f_u(base.grid.x(i), t_new);
    }
    const std::vector<double> u_new = implicit_diffusion_solve(base.u, half_u, g1, dt, dx);

    // volume update in flux form from the new velocity
    std::vector<double> v_new(base.v);
    for (int i = 1; i + 1 < n; ++i) {
        v_new[i] = base.v[i] + dt * (u_new[i + 1] - u_new[i - 1]) * inv2dx;
        if (forcing) v_new[i] += dt * forcing->f_v(base.grid.x(i), t_new);
    }

    // temperature: implicit conduction with lagged kappa(theta)/v, explicit sources
    std::vector<double> w(n), half_th(n - 1), g2(n, 0.0);
    for (int i = 0; i < n; ++i) w[i] = conductivity(par, coef.theta[i]) / coef.v[i];
    for (int i = 0; i + 1 < n; ++i) half_th[i] = 0.5 * (w[i] + w[i + 1]);
    for (int i = 1; i + 1 < n; ++i) {
        g2[i] = u_x[i] * u_x[i] / coef.v[i] + coef.v[i] * mu[i] * mu[i] -
                par.R * coef.theta[i] * u_x[i] / (coef.v[i] - par.b);
        if (forcing) g2[i] += forcing->f_theta(base.grid.x(i), t_new);
    }
    const std::vector<double> theta_new = implicit_diffusion_solve(base.theta, half_th, g2, dt, dx);

    // phase field: implicit eps*chi_xx, explicit reaction and volume coupling
    std::vector<double> chi_new(base.chi);
    if (mode == Mode::nsac) {
        std::vector<double> half_chi(n - 1, eps), g3(n, 0.0);
        for (int i = 1; i + 1 < n; ++i) {
            const double c = coef.chi[i];
            g3[i] = -(coef.v[i] / eps) * (c * c * c - c) - eps * chi_x[i] * v_x[i] / coef.v[i];
            if (forcing) g3[i] += forcing->f_chi(base.grid.x(i), t_new);
        }
        chi_new = implicit_diffusion_solve(base.chi, half_chi, g3, dt, dx);
    }

    State out;
    out.grid = base.grid;
    out.t = t_new;
    out.v = std::move(v_new);
    out.u = u_new;
    out.theta = theta_new;
    out.chi = std::move(chi_new);
    return out;
}

// Solution-space norm ||(v-v_bar, u, theta-theta_bar, chi_x)||_{H1} + ||chi^2-1||.
double solution_norm(const FarField& far, const State& s) {
    const double dx = s.grid.dx;
    const int n = s.n();
    std::vector<double> dv(n), dth(n), c2(n);
    for (int i = 0; i < n; ++i) {
        dv[i] = s.v[i] - far.v_bar;
        dth[i] = s.theta[i] - far.theta_bar;
        c2[i] = s.chi[i] * s.chi[i] - 1.0;
    }
    const std::vector<double> chi_x = gradient(s.chi, dx);
    auto h1sq = [&](const std::vector<double>& f) {
        const double a = l2_norm(f, dx);
        const double b = l2_norm(gradient(f, dx), dx);
        return a * a + b * b;
    };
    const double h1 = std::sqrt(h1sq(dv) + h1sq(s.u) + h1sq(dth) + h1sq(chi_x));
    return h1 + l2_norm(c2, dx);
}

}  // namespace

State step_imex(const VdwParams& par, const FarField& far, const State& s, const SimConfig& cfg,
                const Forcing* forcing) {
    (void)far;
    check_cfl(par, s, cfg);
    State out = linearized_pass(par, s, s, cfg.mode, cfg.dt, forcing);
    validate_state(par, out);
    return out;
}

std::pair<State, PicardReport> picard_step(const VdwParams& par, const FarField& far,
                                           const State& s, const SimConfig& cfg,
                                           const Forcing* forcing) {
    check_cfl(par, s, cfg);
    PicardReport report;
    State prev = s;  // iterate 0: the slab start state
    const double dx = s.grid.dx;
    bool converged = false;
    for (int k = 1; k <= cfg.picard_max_iter; ++k) {
        State next = linearized_pass(par, s, prev, cfg.mode, cfg.dt, forcing);
        validate_state(par, next);
        auto diff_of = [&](const std::vector<double>& a, const std::vector<double>& b) {
            std::vector<double> d(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
            return l2_norm(d, dx);
        };
        const double diff = std::max({diff_of(next.v, prev.v), diff_of(next.u, prev.u),
                                      diff_of(next.theta, prev.theta), diff_of(next.chi, prev.chi)});
        report.diffs.push_back(diff);
        report.iterations = k;
        prev = std::move(next);
        if (diff < cfg.picard_tol) {
            converged = true;
            break;
        }
    }
    for (std::size_t k = 1; k < report.diffs.size(); ++k)
        report.contraction.push_back(report.diffs[k] / report.diffs[k - 1]);
    if (!converged) {
        bool nondecreasing = false;
        for (double ratio : report.contraction)
            if (ratio >= 1.0) nondecreasing = true;
        throw NoConvergence(std::string("picard_step: no convergence in ") +
                                std::to_string(cfg.picard_max_iter) + " iterations" +
                                (nondecreasing ? " (non-decreasing diffs)" : ""),
                            s.t, -1);
    }
    report.m1_obs = *std::min_element(prev.theta.begin(), prev.theta.end());
    report.m2_obs = *std::min_element(prev.v.begin(), prev.v.end());
    report.m_big_obs = solution_norm(far, prev);
    return {std::move(prev), report};
}

}  // namespace nsac
