#include "nsac/state.hpp"

#include <cmath>
#include <string>

#include "nsac/mms.hpp"

namespace nsac {

Grid1D Grid1D::make(double x_min, double x_max, int n) {
    if (!(x_max > x_min)) throw ConfigError("grid: x_max must exceed x_min");
    if (n < 16) throw ConfigError("grid: n must be at least 16");
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n;
    g.dx = (x_max - x_min) / (n - 1);
    return g;
}

namespace {

void pin_boundaries(State& s, const FarField& far, double chi_left, double chi_right) {
    const int n = s.n();
    s.v[0] = far.v_bar;
    s.v[n - 1] = far.v_bar;
    s.u[0] = 0.0;
    s.u[n - 1] = 0.0;
    s.theta[0] = far.theta_bar;
    s.theta[n - 1] = far.theta_bar;
    s.chi[0] = chi_left;
    s.chi[n - 1] = chi_right;
}

}  // namespace

State init_state(const VdwParams& par, const Grid1D& grid, const FarField& far,
                 const ProfileSpec& profile) {
    if (!admissible_far_field(par, far.v_bar, far.theta_bar))
        throw AdmissibilityError("init_state: far field (v_bar, theta_bar) is not in the stable region");

    State s;
    s.grid = grid;
    s.t = 0.0;
    s.v.assign(grid.n, far.v_bar);
    s.u.assign(grid.n, 0.0);
    s.theta.assign(grid.n, far.theta_bar);
    s.chi.assign(grid.n, 1.0);

    switch (profile.kind) {
        case ProfileSpec::Kind::constant:
            // single-phase state, chi = +1 on both sides
            pin_boundaries(s, far, 1.0, 1.0);
            break;
        case ProfileSpec::Kind::tanh_interface: {
            for (int i = 0; i < grid.n; ++i)
                s.chi[i] = std::tanh((grid.x(i) - profile.center) / profile.width);
            pin_boundaries(s, far, FarField::chi_left, FarField::chi_right);
            break;
        }
        case ProfileSpec::Kind::elliptic_bump: {
            const CriticalPoint cp = critical_point(par);
            if (far.theta_bar >= cp.theta_c)
                throw ProfileError("elliptic_bump: no elliptic region at or above theta_c");
            const SpinodalPoints sp = spinodal(par, far.theta_bar);
            double v_mid = profile.v_mid;
            if (std::isnan(v_mid)) v_mid = 0.5 * (sp.v_alpha + sp.v_beta);
            if (!(v_mid > sp.v_alpha && v_mid < sp.v_beta))
                throw ProfileError("elliptic_bump: v_mid must lie strictly inside (v_alpha, v_beta)");
            const double w2 = 2.0 * profile.width * profile.width;
            for (int i = 0; i < grid.n; ++i) {
                const double dxc = grid.x(i) - profile.center;
                s.v[i] = far.v_bar + (v_mid - far.v_bar) * std::exp(-dxc * dxc / w2);
                // unit-width diffuse interface through the bump
                s.chi[i] = std::tanh(dxc);
            }
            pin_boundaries(s, far, FarField::chi_left, FarField::chi_right);
            break;
        }
        case ProfileSpec::Kind::manufactured: {
            MmsProblem m;
            m.params = par;
            m.far = far;
            m.k = profile.k;
            s = m.exact_state(grid, 0.0);
            pin_boundaries(s, far, s.chi[0], s.chi[grid.n - 1]);
            break;
        }
    }
    return s;
}

std::vector<double> chemical_potential(const VdwParams& par, const State& s) {
    const int n = s.n();
    for (int i = 0; i < n; ++i)
        if (!(s.v[i] > par.b + par.h))
            throw BoundViolation("chemical_potential: v <= b+h at node " + std::to_string(i));
    std::vector<double> mu(n, 0.0);
    const double eps = par.epsilon;
    const double inv_dx2 = 1.0 / (s.grid.dx * s.grid.dx);
    for (int i = 1; i + 1 < n; ++i) {
        const double flux_r = (s.chi[i + 1] - s.chi[i]) / (0.5 * (s.v[i + 1] + s.v[i]));
        const double flux_l = (s.chi[i] - s.chi[i - 1]) / (0.5 * (s.v[i] + s.v[i - 1]));
        mu[i] = (s.chi[i] * s.chi[i] * s.chi[i] - s.chi[i]) / eps -
                eps * (flux_r - flux_l) * inv_dx2;
    }
    return mu;
}

void validate_state(const VdwParams& par, const State& s) {
    for (int i = 0; i < s.n(); ++i) {
        if (!(s.theta[i] > 0.0))
            throw NonpositiveTemperature(
                "temperature <= 0 at node " + std::to_string(i), s.t, i);
        if (!(s.v[i] > par.b + par.h))
            throw VolumeCutoff("v <= b+h at node " + std::to_string(i), s.t, i);
    }
}

}  // namespace nsac
