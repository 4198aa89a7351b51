#pragma once

#include <string>

#include "nsac/errors.hpp"

namespace nsac {

// Physical and model constants of the modified van der Waals fluid.
// The admissible specific-volume domain is exactly (b+h, +inf).
struct VdwParams {
    double a = 3.0;            // attraction constant
    double b = 1.0 / 3.0;      // covolume
    double R = 8.0 / 3.0;      // gas constant
    double h = 1.0 / 60.0;     // cutoff margin above the covolume (default 0.05*b)
    double epsilon = 0.1;      // interfacial-energy coefficient
    double kappa_tilde = 1.0;  // conductivity prefactor
    double beta = 1.0;         // conductivity exponent
    double c_v = 1.0;          // specific heat at constant volume
    double e_int0 = 0.0;       // internal-energy offset

    double v_min() const { return b + h; }
    void validate() const;  // throws ConfigError naming the offending field
};

struct CriticalPoint {
    double theta_c;
    double v_c;
    double p_c;
};

// Roots of dp/dv = 0 on a subcritical isotherm, b+h < v_alpha < v_beta.
struct SpinodalPoints {
    double v_alpha;
    double v_beta;
};

// Spinodal points, Maxwell coexistence points and equilibrium pressure of
// one subcritical isotherm.
struct IsothermAnalysis {
    double theta;
    double v_alpha;
    double v_beta;
    double v_star;  // liquid coexistence volume
    double v_sup;   // vapor coexistence volume
    double p_eq;    // Maxwell equilibrium pressure
};

enum class Region { Forbidden, Stable, Metastable, Unstable };

std::string to_string(Region r);

struct PressureDerivatives {
    double dp_dv;
    double dp_dtheta;
};

// p(v,theta) = -a/v^2 + R*theta/(v-b) on v > b+h. The forbidden branch is
// surfaced as DomainError, never as an arithmetic sentinel.
double pressure(const VdwParams& par, double v, double theta);

// dp/dv = 2a/v^3 - R*theta/(v-b)^2, dp/dtheta = R/(v-b).
PressureDerivatives pressure_derivatives(const VdwParams& par, double v, double theta);

// E_int = c_v*theta - a/v + e_int0.
double internal_energy(const VdwParams& par, double v, double theta);

// kappa(theta) = kappa_tilde * theta^beta.
double conductivity(const VdwParams& par, double theta);

// (theta_c, v_c, p_c) = (8a/(27Rb), 3b, a/(27b^2)).
CriticalPoint critical_point(const VdwParams& par);

// Two roots of dp/dv = 0 for 0 < theta < theta_c. Throws NoSpinodal at or
// above the critical temperature, CutoffConflict if v_alpha <= b+h.
SpinodalPoints spinodal(const VdwParams& par, double theta);

// Maxwell equal-area construction on a subcritical isotherm: p_eq with
// p(v_star) = p(v_sup) = p_eq and vanishing closed-form equal-area residual
//   A(p_eq) = [R*theta*ln(xi-b) + a/xi]_{v_star}^{v_sup} - p_eq*(v_sup - v_star).
IsothermAnalysis maxwell_construction(const VdwParams& par, double theta);

// Total partition of v > 0 at fixed theta > 0. Boundary points of the
// spinodal/binodal intervals are assigned Metastable.
Region classify_state(const VdwParams& par, double v, double theta);

// True iff (v_bar, theta_bar) lies in the stable region, i.e. the pair is an
// admissible far field.
bool admissible_far_field(const VdwParams& par, double v_bar, double theta_bar);

}  // namespace nsac
