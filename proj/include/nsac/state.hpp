#pragma once

#include <limits>
#include <vector>

#include "nsac/eos.hpp"

namespace nsac {

// Uniform Lagrangian grid truncating the Cauchy problem to [x_min, x_max].
struct Grid1D {
    double x_min = -16.0;
    double x_max = 16.0;
    int n = 512;
    double dx = 0.0;

    static Grid1D make(double x_min, double x_max, int n);
    double x(int i) const { return x_min + i * dx; }
};

// Far-field limits of (v, u, theta, chi) as x -> -inf / +inf.
struct FarField {
    double v_bar = 3.0;
    double theta_bar = 0.9;
    static constexpr double chi_left = -1.0;
    static constexpr double chi_right = 1.0;
};

// Discrete fields on the grid at one time instant.
struct State {
    Grid1D grid;
    double t = 0.0;
    std::vector<double> v;
    std::vector<double> u;
    std::vector<double> theta;
    std::vector<double> chi;

    int n() const { return grid.n; }
};

struct ProfileSpec {
    enum class Kind { constant, tanh_interface, elliptic_bump, manufactured };
    Kind kind = Kind::constant;
    double width = 1.0;
    double center = 0.0;
    // elliptic_bump target volume; NaN selects the spinodal midpoint
    double v_mid = std::numeric_limits<double>::quiet_NaN();
    int k = 1;  // manufactured wavenumber
};

// Builds an initial state matching the far field at the boundary nodes
// exactly. Throws AdmissibilityError if the far field is not stable,
// ProfileError for an elliptic bump at or above the critical temperature.
State init_state(const VdwParams& par, const Grid1D& grid, const FarField& far,
                 const ProfileSpec& profile);

// mu_i = (chi^3 - chi)/eps - eps * D_x(chi_x / v), compact flux stencil;
// boundary values are pinned to zero (far-field chi = +-1).
std::vector<double> chemical_potential(const VdwParams& par, const State& s);

// Throws NonpositiveTemperature / VolumeCutoff naming the first bad node.
void validate_state(const VdwParams& par, const State& s);

}  // namespace nsac
