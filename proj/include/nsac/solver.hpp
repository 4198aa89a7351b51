#pragma once

#include <utility>
#include <vector>

#include "nsac/mms.hpp"
#include "nsac/state.hpp"

namespace nsac {

enum class Mode { nsac, ns };
enum class StepperKind { imex, picard };

struct SimConfig {
    double dt = 1e-3;
    double t_end = 0.1;
    double cfl = 0.4;  // advective safety factor for the per-step dt validation
    Mode mode = Mode::nsac;
    StepperKind stepper = StepperKind::imex;
    double picard_tol = 1e-10;
    int picard_max_iter = 50;
    int output_every = 10;
    bool allow_unproven = false;  // permit beta = 0 in NSAC mode

    void validate() const;
};

// Iterate history of one frozen-coefficient fixed-point slab.
struct PicardReport {
    int iterations = 0;
    std::vector<double> diffs;        // successive-iterate max L2 differences
    std::vector<double> contraction;  // diffs[k+1]/diffs[k]
    double m1_obs = 0.0;              // observed min theta of the accepted state
    double m2_obs = 0.0;              // observed min v
    double m_big_obs = 0.0;           // observed solution-space norm bound
};

// One first-order IMEX step: implicit diffusion in each parabolic equation
// with coefficients frozen at the incoming state, explicit sources, and the
// volume advanced in flux form from the new velocity. Boundary nodes stay
// pinned. Throws CflViolation / NonpositiveTemperature / VolumeCutoff.
State step_imex(const VdwParams& par, const FarField& far, const State& s, const SimConfig& cfg,
                const Forcing* forcing = nullptr);

// Fixed-point iteration of the linearized slab problem; the first iterate
// coincides with step_imex. Throws NoConvergence when picard_max_iter is
// exhausted.
std::pair<State, PicardReport> picard_step(const VdwParams& par, const FarField& far,
                                           const State& s, const SimConfig& cfg,
                                           const Forcing* forcing = nullptr);

// Local Lagrangian characteristic speed estimate |u| + sqrt(max(0,-dp/dv)*v),
// maximized over nodes; used by the CFL validation.
double max_characteristic_speed(const VdwParams& par, const State& s);

}  // namespace nsac
