#include "nsac/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nsac/util.hpp"

namespace nsac {

CheckResult check_pointwise_bounds(const VdwParams& par, const State& s, double tol_chi) {
    CheckResult r;
    r.name = "pointwise_bounds";
    double min_v_margin = std::numeric_limits<double>::infinity();
    double min_theta = std::numeric_limits<double>::infinity();
    double chi_excess = -std::numeric_limits<double>::infinity();
    int worst_v = 0, worst_theta = 0, worst_chi = 0;
    for (int i = 0; i < s.n(); ++i) {
        const double mv = s.v[i] - (par.b + par.h);
        if (mv < min_v_margin) {
            min_v_margin = mv;
            worst_v = i;
        }
        if (s.theta[i] < min_theta) {
            min_theta = s.theta[i];
            worst_theta = i;
        }
        const double ce = std::abs(s.chi[i]) - 1.0;
        if (ce > chi_excess) {
            chi_excess = ce;
            worst_chi = i;
        }
    }
    r.ok = min_v_margin > 0.0 && min_theta > 0.0 && chi_excess <= tol_chi;
    r.worst_margin = std::min({min_v_margin, min_theta, tol_chi - chi_excess});
    r.details = {{"min_v_margin", min_v_margin},
                 {"min_theta", min_theta},
                 {"max_abs_chi_excess", chi_excess},
                 {"worst_nodes", {worst_v, worst_theta, worst_chi}}};
    return r;
}

CheckResult energy_budget_check(const std::vector<SeriesRow>& series, double e0, double dt,
                                double tol_model) {
    CheckResult r;
    r.name = "energy_budget";
    double dissipated = 0.0;
    double worst_defect = -std::numeric_limits<double>::infinity();
    double worst_t = 0.0;
    for (const SeriesRow& row : series) {
        dissipated += row.V * dt;
        const double defect = row.e_total + dissipated - e0;
        if (defect > worst_defect) {
            worst_defect = defect;
            worst_t = row.t;
        }
    }
    if (series.empty()) worst_defect = 0.0;
    r.ok = worst_defect <= tol_model;
    r.worst_margin = tol_model - worst_defect;
    r.details = {{"max_defect", worst_defect}, {"at_t", worst_t}, {"tol_model", tol_model}};
    return r;
}

namespace {

// Integral of the piecewise-linear interpolant of nodal values over [a, b].
double window_average(const std::vector<double>& f, const Grid1D& g, double a, double b) {
    auto value_at = [&](double x) {
        double s = (x - g.x_min) / g.dx;
        int j = static_cast<int>(std::floor(s));
        j = std::clamp(j, 0, g.n - 2);
        const double w = s - j;
        return f[j] * (1.0 - w) + f[j + 1] * w;
    };
    double integral = 0.0;
    double x_prev = a, f_prev = value_at(a);
    int j = static_cast<int>(std::floor((a - g.x_min) / g.dx)) + 1;
    for (; g.x_min + j * g.dx < b - 1e-12 * g.dx && j < g.n; ++j) {
        const double xj = g.x_min + j * g.dx;
        integral += 0.5 * (f_prev + f[j]) * (xj - x_prev);
        x_prev = xj;
        f_prev = f[j];
    }
    integral += 0.5 * (f_prev + value_at(b)) * (b - x_prev);
    return integral / (b - a);
}

struct WindowBound {
    double lo, hi;
    bool empty;
};

}  // namespace

CheckResult cell_average_check(const VdwParams& par, const FarField& far, const State& s,
                               const CellAverageBounds& bounds) {
    CheckResult r;
    r.name = "cell_averages";
    const Grid1D& g = s.grid;
    const int m_lo = static_cast<int>(std::ceil(g.x_min - 1e-12));
    const int m_hi = static_cast<int>(std::floor(g.x_max + 1e-12)) - 1;  // last window start
    const int n_windows = std::max(0, m_hi - m_lo + 1);
    if (n_windows < 2) {
        r.details["skipped"] = "domain shorter than two unit windows";
        return r;
    }

    WindowBound bv{}, bt{};
    if (!bounds.empty) {
        const double tol = 1e-6 * (bounds.alpha2 - bounds.alpha1) + 1e-12 * (1.0 + std::abs(bounds.alpha2));
        bv = bt = {bounds.alpha1 - tol, bounds.alpha2 + tol, false};
        r.details["form"] = "combined";
    } else {
        const Interval iv = phi_sublevel(par, far, bounds.rhs);
        const Interval it = psi_sublevel(far, bounds.rhs);
        auto widen = [](const Interval& i) {
            const double tol = 1e-6 * (i.hi - i.lo) + 1e-12 * (1.0 + std::abs(i.hi));
            return WindowBound{i.lo - tol, i.hi + tol, i.empty};
        };
        bv = widen(iv);
        bt = widen(it);
        r.details["form"] = "per_term_fallback";
    }
    if (bv.empty || bt.empty) {
        r.ok = false;
        r.worst_margin = -1.0;
        r.details["reason"] = "empty sublevel interval, nothing to certify against";
        return r;
    }

    double worst = std::numeric_limits<double>::infinity();
    int worst_window = m_lo;
    std::string worst_field = "v";
    for (int m = m_lo; m <= m_hi; ++m) {
        const double av = window_average(s.v, g, m, m + 1.0);
        const double at = window_average(s.theta, g, m, m + 1.0);
        const double margin_v = std::min(av - bv.lo, bv.hi - av);
        const double margin_t = std::min(at - bt.lo, bt.hi - at);
        if (margin_v < worst) {
            worst = margin_v;
            worst_window = m;
            worst_field = "v";
        }
        if (margin_t < worst) {
            worst = margin_t;
            worst_window = m;
            worst_field = "theta";
        }
    }
    r.ok = worst >= 0.0;
    r.worst_margin = worst;
    r.details["windows"] = n_windows;
    r.details["worst_window"] = worst_window;
    r.details["worst_field"] = worst_field;
    r.details["alpha1"] = bounds.alpha1;
    r.details["alpha2"] = bounds.alpha2;
    return r;
}

CheckResult kazhikhov_reconstruction(const VdwParams& par, const std::vector<Snapshot>& snapshots,
                                     double dt, double threshold, KazhikhovTrace* trace) {
    CheckResult r;
    r.name = "kazhikhov_reconstruction";
    const std::size_t K = snapshots.size();
    if (K < 2) {
        r.details["skipped"] = "fewer than two snapshots";
        return r;
    }
    for (std::size_t k = 0; k + 1 < K; ++k) {
        const double dtau = snapshots[k + 1].state.t - snapshots[k].state.t;
        if (dtau > 10.0 * dt * (1.0 + 1e-9))
            throw InsufficientCadence("kazhikhov_reconstruction: snapshot spacing exceeds 10*dt");
    }

    const Grid1D& g = snapshots[0].state.grid;
    const State& s0 = snapshots[0].state;
    const int m_lo = static_cast<int>(std::ceil(g.x_min - 1e-12));
    const int m_hi = static_cast<int>(std::floor(g.x_max + 1e-12)) - 1;
    if (m_hi < m_lo) {
        r.details["skipped"] = "no unit window fits the domain";
        return r;
    }

    // per-snapshot derived fields
    std::vector<std::vector<double>> inner(K), anchor_q(K);
    for (std::size_t k = 0; k < K; ++k) {
        const State& s = snapshots[k].state;
        const std::vector<double> chi_x = gradient(s.chi, g.dx);
        inner[k].resize(g.n);
        anchor_q[k].resize(g.n);
        for (int i = 0; i < g.n; ++i) {
            const double v = s.v[i];
            const double cx2 = chi_x[i] * chi_x[i];
            inner[k][i] = -par.a / v + par.R * v * s.theta[i] / (v - par.b) +
                          0.5 * par.epsilon * cx2 / v;
            anchor_q[k][i] = -par.a / (v * v) + par.R * s.theta[i] / (v - par.b) +
                             0.5 * par.epsilon * cx2 / (v * v);
        }
    }

    double max_rel_err = 0.0;
    int worst_node = 0;
    double worst_t = 0.0;

    for (int m = m_lo; m <= m_hi; ++m) {
        const int a = static_cast<int>(std::ceil((m - g.x_min) / g.dx - 1e-9));
        int jend = static_cast<int>(std::ceil((m + 1 - g.x_min) / g.dx - 1e-9)) - 1;
        if (m == m_hi) jend = std::min(jend, g.n - 1);
        if (jend < a) continue;
        const int nw = jend - a + 1;

        std::vector<double> bracket(nw, 1.0), f_prev(nw, 0.0), d_last(nw, 0.0);
        double T_accum = 0.0;  // trapezoid of the anchor exponent integrand
        double y_prev = 1.0;
        for (std::size_t k = 0; k < K; ++k) {
            const State& s = snapshots[k].state;
            if (k > 0) {
                const double dtau = s.t - snapshots[k - 1].state.t;
                T_accum += 0.5 * dtau * (anchor_q[k - 1][a] + anchor_q[k][a]);
            }
            const double y_k = (s.v[a] / s0.v[a]) * std::exp(-T_accum);

            // D over the window by cumulative spatial trapezoid of u - u0
            double S = 0.0;
            std::vector<double> d_now(nw);
            d_now[0] = s0.v[a];
            for (int j = 1; j < nw; ++j) {
                const double du_l = s.u[a + j - 1] - s0.u[a + j - 1];
                const double du_r = s.u[a + j] - s0.u[a + j];
                S += 0.5 * g.dx * (du_l + du_r);
                d_now[j] = s0.v[a + j] * std::exp(S);
            }
            std::vector<double> f_now(nw);
            for (int j = 0; j < nw; ++j) f_now[j] = inner[k][a + j] / d_now[j];

            if (k > 0) {
                // integrating-factor quadrature: trapezoid on f, exact
                // exponential interpolation of 1/Y between snapshots
                const double dtau = s.t - snapshots[k - 1].state.t;
                const double q_hat = std::log(y_prev / y_k) / dtau;
                const double w = (std::abs(q_hat) > 1e-300) ? std::expm1(q_hat * dtau) / q_hat
                                                            : dtau;
                for (int j = 0; j < nw; ++j)
                    bracket[j] += 0.5 * (f_prev[j] + f_now[j]) * w / y_prev;
                for (int j = 0; j < nw; ++j) {
                    const double v_rec = d_now[j] * y_k * bracket[j];
                    const double rel = std::abs(v_rec - s.v[a + j]) / s.v[a + j];
                    if (rel > max_rel_err) {
                        max_rel_err = rel;
                        worst_node = a + j;
                        worst_t = s.t;
                    }
                }
            }
            f_prev = std::move(f_now);
            d_last = std::move(d_now);
            y_prev = y_k;

            if (trace && m == m_lo && k + 1 == K) {
                trace->anchor_index = a;
                trace->d_field = d_last;
                trace->y_value = y_k;
                trace->accum.resize(nw);
                trace->v_reconstructed.resize(nw);
                for (int j = 0; j < nw; ++j) {
                    trace->accum[j] = bracket[j] - 1.0;
                    trace->v_reconstructed[j] = d_last[j] * y_k * bracket[j];
                }
            }
        }
    }

    r.ok = max_rel_err < threshold;
    r.worst_margin = threshold - max_rel_err;
    r.details = {{"max_rel_err", max_rel_err},
                 {"worst_node", worst_node},
                 {"at_t", worst_t},
                 {"threshold", threshold}};
    return r;
}

std::vector<double> truncation_norms(const FarField& far, const State& s,
                                     const std::vector<double>& p_list) {
    const int n = s.n();
    std::vector<double> trunc(n);
    for (int i = 0; i < n; ++i) {
        if (!(s.theta[i] > 0.0)) throw DomainError("truncation_norms: theta <= 0");
        trunc[i] = std::max(1.0 / s.theta[i] - 2.0 * far.theta_bar, 0.0);
    }
    std::vector<double> out;
    out.reserve(p_list.size() + 1);
    for (double p : p_list) {
        std::vector<double> powed(n);
        for (int i = 0; i < n; ++i) powed[i] = std::pow(trunc[i], p + 1.0);
        out.push_back(std::pow(trapz(powed, s.grid.dx), 1.0 / (p + 1.0)));
    }
    out.push_back(*std::max_element(trunc.begin(), trunc.end()));
    return out;
}

CheckResult sobolev_sup_check(const State& s) {
    CheckResult r;
    r.name = "sobolev_sup";
    const double dx = s.grid.dx;
    const std::vector<double> chi_x = gradient(s.chi, dx);
    std::vector<double> f(s.n());
    for (int i = 0; i < s.n(); ++i) f[i] = chi_x[i] / s.v[i];
    if (std::abs(f.front()) >= 1e-8 || std::abs(f.back()) >= 1e-8)
        throw PreconditionFailed("sobolev_sup_check: chi_x/v does not decay at the boundary");
    double sup2 = 0.0;
    for (double x : f) sup2 = std::max(sup2, x * x);
    const double nf = l2_norm(f, dx);
    const double nfx = l2_norm(gradient(f, dx), dx);
    const double tol_disc = 10.0 * dx * (nf * nfx + 1.0);
    const double bound = 2.0 * nf * nfx + tol_disc;
    r.ok = sup2 <= bound;
    r.worst_margin = bound - sup2;
    r.details = {{"sup_f_sq", sup2}, {"l2_f", nf}, {"l2_fx", nfx}, {"bound", bound}};
    return r;
}

bool DiagnosticsReport::all_ok() const {
    for (const CheckResult& c : checks)
        if (!c.ok) return false;
    return true;
}

nlohmann::json DiagnosticsReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
        arr.push_back({{"name", c.name},
                       {"ok", c.ok},
                       {"worst_margin", c.worst_margin},
                       {"details", c.details}});
    return arr;
}

DiagnosticsReport run_all_checks(const VdwParams& par, const FarField& far, const RunResult& run,
                                 double dt, const DiagnosticsOptions& opts) {
    DiagnosticsReport rep;
    if (run.snapshots.empty()) {
        CheckResult r;
        r.name = "artifacts";
        r.ok = false;
        r.details["reason"] = "no snapshots";
        rep.checks.push_back(r);
        return rep;
    }
    const Grid1D& g = run.snapshots.front().state.grid;

    // pointwise bounds over every snapshot, refined with per-step series extrema
    {
        CheckResult worst;
        worst.name = "pointwise_bounds";
        worst.worst_margin = std::numeric_limits<double>::infinity();
        worst.ok = true;
        for (const Snapshot& snap : run.snapshots) {
            CheckResult c = check_pointwise_bounds(par, snap.state, opts.tol_chi);
            if (c.worst_margin < worst.worst_margin) {
                c.details["at_step"] = snap.step;
                worst = c;
            }
        }
        for (const SeriesRow& row : run.series) {
            const double margin = std::min({row.min_v - (par.b + par.h), row.min_theta,
                                            opts.tol_chi - (row.max_abs_chi - 1.0)});
            if (margin < worst.worst_margin) {
                worst.worst_margin = margin;
                worst.ok = margin > 0.0;
                worst.details["at_t"] = row.t;
            }
        }
        rep.checks.push_back(worst);
    }

    // mass conservation: drift of the series mass integral
    {
        CheckResult r;
        r.name = "mass_conservation";
        double drift = 0.0, step_jump = 0.0, prev = run.mass0;
        for (const SeriesRow& row : run.series) {
            drift = std::max(drift, std::abs(row.mass - run.mass0));
            step_jump = std::max(step_jump, std::abs(row.mass - prev));
            prev = row.mass;
        }
        r.ok = drift <= opts.mass_tol;
        r.worst_margin = opts.mass_tol - drift;
        r.details = {{"max_drift", drift}, {"max_step_jump", step_jump}, {"tol", opts.mass_tol}};
        rep.checks.push_back(r);
    }

    // energy budget
    {
        const double t_end = run.series.empty() ? dt : run.series.back().t;
        const double tol_model = opts.energy_budget_constant * (g.dx * g.dx + dt) * t_end *
                                 std::max(1.0, run.e0);
        rep.checks.push_back(energy_budget_check(run.series, run.e0, dt, tol_model));
    }

    // cell averages at every snapshot
    {
        const CellAverageBounds bounds =
            alpha_roots(par, far, run.e0, run.mass0, opts.algebraic_eq_form);
        CheckResult worst;
        worst.name = "cell_averages";
        worst.worst_margin = std::numeric_limits<double>::infinity();
        for (const Snapshot& snap : run.snapshots) {
            CheckResult c = cell_average_check(par, far, snap.state, bounds);
            if (c.worst_margin < worst.worst_margin || !c.ok) {
                c.details["at_step"] = snap.step;
                worst = c;
                if (!c.ok) break;
            }
        }
        rep.checks.push_back(worst);
    }

    // Kazhikhov reconstruction
    try {
        rep.checks.push_back(
            kazhikhov_reconstruction(par, run.snapshots, dt, opts.kazhikhov_tol));
    } catch (const InsufficientCadence& e) {
        CheckResult r;
        r.name = "kazhikhov_reconstruction";
        r.ok = false;
        r.worst_margin = -1.0;
        r.details["error"] = e.what();
        rep.checks.push_back(r);
    }

    // truncation norms approach the sup monotonically (within discrete slack)
    {
        CheckResult r;
        r.name = "truncation_norms";
        double worst = std::numeric_limits<double>::infinity();
        double sup_seen = 0.0;
        for (const Snapshot& snap : run.snapshots) {
            const std::vector<double> norms =
                truncation_norms(far, snap.state, opts.truncation_p_list);
            const double sup = norms.back();
            sup_seen = std::max(sup_seen, sup);
            for (std::size_t i = 0; i + 2 < norms.size(); ++i) {
                const double slack = 1e-9 * (1.0 + sup);
                const double margin =
                    std::abs(norms[i] - sup) - std::abs(norms[i + 1] - sup) + slack;
                worst = std::min(worst, margin);
            }
        }
        r.ok = worst >= 0.0 || !std::isfinite(worst);
        r.worst_margin = std::isfinite(worst) ? worst : 0.0;
        r.details["max_sup"] = sup_seen;
        rep.checks.push_back(r);
    }

    // Sobolev sup inequality per snapshot
    {
        CheckResult worst;
        worst.name = "sobolev_sup";
        worst.worst_margin = std::numeric_limits<double>::infinity();
        try {
            for (const Snapshot& snap : run.snapshots) {
                CheckResult c = sobolev_sup_check(snap.state);
                if (c.worst_margin < worst.worst_margin) {
                    c.details["at_step"] = snap.step;
                    worst = c;
                }
            }
        } catch (const PreconditionFailed& e) {
            worst.ok = false;
            worst.worst_margin = -1.0;
            worst.details["error"] = e.what();
        }
        rep.checks.push_back(worst);
    }

    // NS-mode monitors stay finite
    {
        CheckResult r;
        r.name = "ns_monitors";
        double max_mv = 0.0, tilde_integral = 0.0;
        for (const SeriesRow& row : run.series) {
            max_mv = std::max(max_mv, row.m_v);
            tilde_integral += row.tilde_v * dt;
        }
        r.ok = std::isfinite(max_mv) && std::isfinite(tilde_integral);
        r.worst_margin = r.ok ? 1.0 : -1.0;
        r.details = {{"max_M_v", max_mv}, {"tilde_V_time_integral", tilde_integral}};
        rep.checks.push_back(r);
    }

    return rep;
}

}  // namespace nsac
