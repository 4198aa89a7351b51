#pragma once

#include <vector>

#include "nsac/state.hpp"

namespace nsac {

// Which form of the cell-average algebraic equation G(y) = rhs to use; the
// printed source relation differs from the sum of the two energy functions
// (see README), so both are available.
enum class AlgebraicEqForm { phi_consistent, as_printed };

struct EnergyReport {
    double e_kinetic = 0.0;    // int u^2/(2 theta_bar) dx
    double e_interface = 0.0;  // int W(chi, chi_x)/theta_bar dx
    double e_phi = 0.0;        // int Phi(v) dx
    double e_psi = 0.0;        // int Psi(theta) dx
    double e_total = 0.0;
    double dissipation_v = 0.0;  // V(t)
    double mass_integral = 0.0;  // int (v - v_bar) dx
    double e0 = 0.0;             // total of the state this report was built from
};

struct CellAverageBounds {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double rhs = 0.0;
    bool empty = false;
    // true when G stays below rhs all the way down to the domain edge, so no
    // left root exists and alpha1 is the edge itself
    bool left_clipped = false;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = false;
};

// Volume energy function; +inf for v <= b+h (the one operation whose codomain
// carries the infinity, all others reject the forbidden domain with errors).
double phi(const VdwParams& par, const FarField& far, double v);

// Temperature energy function (theta - theta_bar)/theta_bar - ln(theta/theta_bar).
double psi(const FarField& far, double theta);

// Derivative of phi in v, (p(v_bar,theta_bar) - p(v,theta_bar))/theta_bar.
double phi_prime(const VdwParams& par, const FarField& far, double v);

// Trapezoid-quadrature energy decomposition, dissipation and mass integral of
// a discrete state. Throws BoundViolation if any node violates v > b+h or
// theta > 0.
EnergyReport energy_report(const VdwParams& par, const FarField& far, const State& s,
                           const std::vector<double>& mu);

// Left-hand side G(y) of the cell-average algebraic equation.
double algebraic_lhs(const VdwParams& par, const FarField& far, double y, AlgebraicEqForm form);

// Roots of G(y) = e0 + a/(theta_bar*v_bar*(b+h)) * mass0 around the minimizer
// of G; empty when rhs < min G.
CellAverageBounds alpha_roots(const VdwParams& par, const FarField& far, double e0, double mass0,
                              AlgebraicEqForm form = AlgebraicEqForm::phi_consistent);

// Outer hull of {y : Phi(y) <= level} resp. {y : Psi(y) <= level}; used as the
// per-term fallback when the combined bounds are empty.
Interval phi_sublevel(const VdwParams& par, const FarField& far, double level);
Interval psi_sublevel(const FarField& far, double level);

}  // namespace nsac
