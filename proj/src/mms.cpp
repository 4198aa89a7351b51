#include "nsac/mms.hpp"

#include <cmath>

namespace nsac {

namespace {

struct Fields {
    double v, v_t, v_x;
    double u, u_t, u_x, u_xx;
    double th, th_t, th_x, th_xx;
    double chi, chi_t, chi_x, chi_xx;
};

Fields eval(const MmsProblem& m, double x, double t) {
    const double s2 = m.sigma * m.sigma;
    const double E = std::exp(-x * x / (2.0 * s2));
    const double Ep = -(x / s2) * E;
    const double Epp = (x * x / (s2 * s2) - 1.0 / s2) * E;
    const double ck = std::cos(m.k * x), sk = std::sin(m.k * x);
    const double g = E * ck;
    const double gp = Ep * ck - m.k * E * sk;
    const double gpp = Epp * ck - 2.0 * m.k * Ep * sk - m.k * m.k * E * ck;

    const double c = std::cos(m.omega * t), s = std::sin(m.omega * t);
    const double q = 0.5 * (1.0 + c);
    const double q_t = -0.5 * m.omega * s;

    Fields f;
    f.v = m.far.v_bar * (1.0 + m.amp_v * g * c);
    f.v_t = -m.far.v_bar * m.amp_v * g * m.omega * s;
    f.v_x = m.far.v_bar * m.amp_v * gp * c;

    f.u = m.amp_u * g * s;
    f.u_t = m.amp_u * g * m.omega * c;
    f.u_x = m.amp_u * gp * s;
    f.u_xx = m.amp_u * gpp * s;

    f.th = m.far.theta_bar * (1.0 + m.amp_theta * g * c);
    f.th_t = -m.far.theta_bar * m.amp_theta * g * m.omega * s;
    f.th_x = m.far.theta_bar * m.amp_theta * gp * c;
    f.th_xx = m.far.theta_bar * m.amp_theta * gpp * c;

    f.chi = 1.0 - m.amp_chi * g * g * q;
    f.chi_t = -m.amp_chi * g * g * q_t;
    f.chi_x = -2.0 * m.amp_chi * g * gp * q;
    f.chi_xx = -2.0 * m.amp_chi * (gp * gp + g * gpp) * q;
    return f;
}

double mms_mu(const MmsProblem& m, const Fields& f) {
    const double eps = m.params.epsilon;
    return (f.chi * f.chi * f.chi - f.chi) / eps -
           eps * (f.chi_xx / f.v - f.chi_x * f.v_x / (f.v * f.v));
}

}  // namespace

double MmsProblem::v(double x, double t) const { return eval(*this, x, t).v; }
double MmsProblem::u(double x, double t) const { return eval(*this, x, t).u; }
double MmsProblem::theta(double x, double t) const { return eval(*this, x, t).th; }
double MmsProblem::chi(double x, double t) const { return eval(*this, x, t).chi; }

State MmsProblem::exact_state(const Grid1D& grid, double t) const {
    State s;
    s.grid = grid;
    s.t = t;
    s.v.resize(grid.n);
    s.u.resize(grid.n);
    s.theta.resize(grid.n);
    s.chi.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const Fields f = eval(*this, grid.x(i), t);
        s.v[i] = f.v;
        s.u[i] = f.u;
        s.theta[i] = f.th;
        s.chi[i] = f.chi;
    }
    return s;
}

Forcing MmsProblem::forcing() const {
    const MmsProblem m = *this;
    Forcing out;
    out.f_v = [m](double x, double t) {
        const Fields f = eval(m, x, t);
        return f.v_t - f.u_x;
    };
    out.f_u = [m](double x, double t) {
        const Fields f = eval(m, x, t);
        const PressureDerivatives d = pressure_derivatives(m.params, f.v, f.th);
        const double p_x = d.dp_dv * f.v_x + d.dp_dtheta * f.th_x;
        const double visc_x = f.u_xx / f.v - f.u_x * f.v_x / (f.v * f.v);
        const double eps = m.params.epsilon;
        const double cap_x =
            eps * (f.chi_x * f.chi_xx / (f.v * f.v) - f.chi_x * f.chi_x * f.v_x / (f.v * f.v * f.v));
        return f.u_t + p_x - visc_x + cap_x;
    };
    out.f_theta = [m](double x, double t) {
        const Fields f = eval(m, x, t);
        const double kap = conductivity(m.params, f.th);
        const double kap_p = m.params.kappa_tilde * m.params.beta * std::pow(f.th, m.params.beta - 1.0);
        const double cond_x =
            kap_p * f.th_x * f.th_x / f.v + kap * f.th_xx / f.v - kap * f.th_x * f.v_x / (f.v * f.v);
        const double mu = mms_mu(m, f);
        return f.th_t + m.params.R * f.th / (f.v - m.params.b) * f.u_x - cond_x -
               f.u_x * f.u_x / f.v - f.v * mu * mu;
    };
    out.f_chi = [m](double x, double t) {
        const Fields f = eval(m, x, t);
        return f.chi_t + f.v * mms_mu(m, f);
    };
    return out;
}

}  // namespace nsac
