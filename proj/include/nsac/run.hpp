#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsac/energy.hpp"
#include "nsac/solver.hpp"

namespace nsac {

struct Snapshot {
    int step = 0;
    State state;
    std::vector<double> mu;
};

// One row of the per-step series.
struct SeriesRow {
    double t, e_kin, e_W, e_phi, e_psi, e_total, V, mass;
    double min_v, max_v, min_theta, max_theta, max_abs_chi;
    double m_v, tilde_v;
};

struct AbortRecord {
    std::string reason;
    int step = -1;
    double time = 0.0;
    int node = -1;
};

struct RunResult {
    std::vector<Snapshot> snapshots;
    std::vector<SeriesRow> series;
    double e0 = 0.0;
    double mass0 = 0.0;
    int steps = 0;
    // max deviation of the fields from their far-field values over the outer
    // 10% of the domain; detects boundary contamination of the truncation
    double far_field_deviation = 0.0;
    int picard_max_iterations = 0;
    std::optional<AbortRecord> abort;
};

// Time loop. Aborts are caught and recorded in the result rather than thrown
// so that partial artifacts stay available. NSAC mode with beta = 0 is
// rejected (ConfigError) unless cfg.allow_unproven is set.
RunResult run(const VdwParams& par, const FarField& far, const State& initial,
              const SimConfig& cfg, const Forcing* forcing = nullptr);

SeriesRow make_series_row(const VdwParams& par, const FarField& far, const State& s,
                          const std::vector<double>& mu);

// M_v = 1 + max v and the tilde dissipation monitor
// int u^2/(2 theta_bar) dx + int (theta_x^2/(v theta^2) + u_x^2/(v theta)) dx + 1.
std::pair<double, double> ns_monitors(const FarField& far, const State& s);

}  // namespace nsac
