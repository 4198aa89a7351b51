#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nsac/run.hpp"

namespace nsac {

struct CheckResult {
    std::string name;
    bool ok = true;
    double worst_margin = 0.0;  // signed; positive means pass distance
    nlohmann::json details = nlohmann::json::object();
};

// Verifies v > b+h, theta > 0, |chi| <= 1 + tol_chi at every node.
CheckResult check_pointwise_bounds(const VdwParams& par, const State& s, double tol_chi = 1e-8);

// defect(t) = e_total(t) + sum V dt - e0 must stay below tol_model; the
// continuous energy law gives defect <= 0, the discrete scheme is allowed the
// calibrated budget.
CheckResult energy_budget_check(const std::vector<SeriesRow>& series, double e0, double dt,
                                double tol_model);

// Unit-window averages of v and theta against [alpha1 - tol, alpha2 + tol];
// per-term sublevel fallback when the combined bounds are empty.
CheckResult cell_average_check(const VdwParams& par, const FarField& far, const State& s,
                               const CellAverageBounds& bounds);

struct KazhikhovTrace {
    int anchor_index = 0;
    std::vector<double> d_field;
    double y_value = 1.0;
    std::vector<double> accum;  // running bracket integral
    std::vector<double> v_reconstructed;
};

// Reconstructs v from the particle-path representation v = D * Y * (1 + int)
// and reports the max relative error against the evolved field. Throws
// InsufficientCadence when snapshot spacing exceeds 10*dt.
CheckResult kazhikhov_reconstruction(const VdwParams& par, const std::vector<Snapshot>& snapshots,
                                     double dt, double threshold = 5e-2,
                                     KazhikhovTrace* trace = nullptr);

// Discrete L^{p+1} norms of (theta^{-1} - 2*theta_bar)_+ for each p in
// p_list; the sup norm is appended as the last entry.
std::vector<double> truncation_norms(const FarField& far, const State& s,
                                     const std::vector<double>& p_list);

// Discrete Sobolev sup inequality for f = chi_x / v:
//   sup f^2 <= 2 ||f|| ||f_x|| + tol_disc,  tol_disc = 10*dx*(||f|| ||f_x|| + 1).
// Requires |f| < 1e-8 at both boundary nodes (PreconditionFailed otherwise).
CheckResult sobolev_sup_check(const State& s);

struct DiagnosticsOptions {
    double tol_chi = 1e-8;
    double mass_tol = 1e-10;
    double kazhikhov_tol = 5e-2;
    // budget = constant * (dx^2 + dt) * t_end * max(1, e0); calibrated on the
    // manufactured problem
    double energy_budget_constant = 40.0;
    AlgebraicEqForm algebraic_eq_form = AlgebraicEqForm::phi_consistent;
    std::vector<double> truncation_p_list = {2.0, 4.0, 8.0, 16.0};
};

struct DiagnosticsReport {
    std::vector<CheckResult> checks;
    bool all_ok() const;
    nlohmann::json to_json() const;
};

DiagnosticsReport run_all_checks(const VdwParams& par, const FarField& far, const RunResult& run,
                                 double dt, const DiagnosticsOptions& opts = {});

}  // namespace nsac
