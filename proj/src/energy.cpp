#include "nsac/energy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "nsac/util.hpp"

namespace nsac {

double phi(const VdwParams& par, const FarField& far, double v) {
    if (v <= par.b + par.h) return std::numeric_limits<double>::infinity();
    const double vb = far.v_bar, tb = far.theta_bar;
    const double p_bar = par.R * tb / (vb - par.b) - par.a / (vb * vb);
    return (p_bar * (v - vb) - (par.a / v - par.a / vb) -
            par.R * tb * std::log((v - par.b) / (vb - par.b))) /
           tb;
}

double phi_prime(const VdwParams& par, const FarField& far, double v) {
    if (v <= par.b + par.h) return -std::numeric_limits<double>::infinity();
    const double vb = far.v_bar, tb = far.theta_bar;
    const double p_bar = par.R * tb / (vb - par.b) - par.a / (vb * vb);
    const double p_v = par.R * tb / (v - par.b) - par.a / (v * v);
    return (p_bar - p_v) / tb;
}

double psi(const FarField& far, double theta) {
    if (!(theta > 0.0)) throw DomainError("psi: theta must be positive");
    return (theta - far.theta_bar) / far.theta_bar - std::log(theta / far.theta_bar);
}

EnergyReport energy_report(const VdwParams& par, const FarField& far, const State& s,
                           const std::vector<double>& mu) {
    const int n = s.n();
    for (int i = 0; i < n; ++i) {
        if (!(s.v[i] > par.b + par.h))
            throw BoundViolation("energy_report: v <= b+h at node " + std::to_string(i));
        if (!(s.theta[i] > 0.0))
            throw BoundViolation("energy_report: theta <= 0 at node " + std::to_string(i));
    }
    const double dx = s.grid.dx;
    const double tb = far.theta_bar;
    const std::vector<double> chi_x = gradient(s.chi, dx);
    const std::vector<double> u_x = gradient(s.u, dx);
    const std::vector<double> theta_x = gradient(s.theta, dx);

    std::vector<double> kin(n), itf(n), fphi(n), fpsi(n), diss(n), dm(n);
    for (int i = 0; i < n; ++i) {
        kin[i] = s.u[i] * s.u[i] / (2.0 * tb);
        const double c2m1 = s.chi[i] * s.chi[i] - 1.0;
        const double W = c2m1 * c2m1 / (4.0 * par.epsilon) +
                         0.5 * par.epsilon * chi_x[i] * chi_x[i] / s.v[i];
        itf[i] = W / tb;
        fphi[i] = phi(par, far, s.v[i]);
        fpsi[i] = psi(far, s.theta[i]);
        const double th = s.theta[i];
        diss[i] = conductivity(par, th) * theta_x[i] * theta_x[i] / (s.v[i] * th * th) +
                  u_x[i] * u_x[i] / (s.v[i] * th) + s.v[i] * mu[i] * mu[i] / th;
        dm[i] = s.v[i] - far.v_bar;
    }
    EnergyReport r;
    r.e_kinetic = trapz(kin, dx);
    r.e_interface = trapz(itf, dx);
    r.e_phi = trapz(fphi, dx);
    r.e_psi = trapz(fpsi, dx);
    r.e_total = r.e_kinetic + r.e_interface + r.e_phi + r.e_psi;
    r.dissipation_v = trapz(diss, dx);
    r.mass_integral = trapz(dm, dx);
    r.e0 = r.e_total;
    return r;
}

double algebraic_lhs(const VdwParams& par, const FarField& far, double y, AlgebraicEqForm form) {
    if (form == AlgebraicEqForm::phi_consistent) {
        if (y <= par.b + par.h) return std::numeric_limits<double>::infinity();
        return phi(par, far, y) + psi(far, y);
    }
    if (y <= par.b) return std::numeric_limits<double>::infinity();
    const double vb = far.v_bar, tb = far.theta_bar;
    return (par.R / (vb - par.b) - par.a / (vb * vb)) / tb * (y - vb) -
           par.R * std::log((y - par.b) / (vb - par.b)) + (y - tb) / tb - std::log(y / tb);
}

namespace {

// Coarse log-spaced scan for the minimizer bracket of a function that tends
// to +inf at both ends of (lo, inf).
template <class F>
double locate_minimum(F&& f, double lo_eval, double hi) {
    const int n_scan = 2048;
    const double ratio = std::log(hi / lo_eval) / (n_scan - 1);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_scan; ++i) {
        const double y = lo_eval * std::exp(i * ratio);
        const double val = f(y);
        if (val < best_val) {
            best_val = val;
            best = i;
        }
    }
    const double a = lo_eval * std::exp(std::max(0, best - 1) * ratio);
    const double b = lo_eval * std::exp(std::min(n_scan - 1, best + 1) * ratio);
    return detail::golden_min(f, a, b);
}

}  // namespace

CellAverageBounds alpha_roots(const VdwParams& par, const FarField& far, double e0, double mass0,
                              AlgebraicEqForm form) {
    CellAverageBounds out;
    out.rhs = e0 + par.a / (far.theta_bar * far.v_bar * (par.b + par.h)) * mass0;

    const double lo = (form == AlgebraicEqForm::phi_consistent) ? par.b + par.h : par.b;
    const double lo_eval = lo + 1e-9 * (1.0 + lo);
    auto G = [&](double y) { return algebraic_lhs(par, far, y, form); };

    double hi = std::max({4.0 * far.v_bar, 4.0 * far.theta_bar, 4.0 * lo_eval});
    while (G(hi) < out.rhs && hi < 1e12) hi *= 2.0;
    hi *= 2.0;

    const double y_min = locate_minimum(G, lo_eval, hi);
    const double g_min = G(y_min);
    const double slack = 1e-14 * (1.0 + std::abs(out.rhs));
    if (g_min > out.rhs + slack) {
        out.empty = true;
        out.alpha1 = out.alpha2 = y_min;
        return out;
    }
    auto resid = [&](double y) { return G(y) - out.rhs; };
    if (resid(lo_eval) <= 0.0) {
        // G never climbs back to rhs on the left of the minimizer
        out.left_clipped = true;
        out.alpha1 = lo;
    } else {
        out.alpha1 = detail::bisect(resid, lo_eval, y_min, +1);
    }
    double right = std::max(2.0 * y_min, hi);
    while (resid(right) < 0.0 && right < 1e14) right *= 2.0;
    out.alpha2 = detail::bisect(resid, y_min, right, -1);
    return out;
}

namespace {

// Outer hull of a sublevel set located by a log-spaced sign scan; f must tend
// to +inf at both ends of (lo_eval, hi) and attain its minimum at y0.
Interval sublevel_hull(const std::function<double(double)>& f, double lo_domain, double lo_eval,
                       double y0, double level) {
    Interval out;
    if (level < 0.0) {
        out.empty = true;
        return out;
    }
    if (level <= 1e-14) {
        out.lo = out.hi = y0;
        return out;
    }
    auto resid = [&](double y) { return f(y) - level; };
    if (resid(lo_eval) <= 0.0) {
        out.lo = lo_domain;
    } else {
        // first crossing from the left on a log grid, then bisect
        const int n_scan = 4096;
        const double ratio = std::log(y0 / lo_eval) / (n_scan - 1);
        double prev = lo_eval;
        out.lo = y0;
        for (int i = 1; i < n_scan; ++i) {
            const double y = lo_eval * std::exp(i * ratio);
            if (resid(y) <= 0.0) {
                out.lo = detail::bisect(resid, prev, y, +1);
                break;
            }
            prev = y;
        }
    }
    double right = std::max(2.0 * y0, 1.0);
    while (resid(right) < 0.0 && right < 1e14) right *= 2.0;
    // last crossing: scan backwards from `right`
    const int n_scan = 4096;
    const double ratio = std::log(right / y0) / (n_scan - 1);
    double prev = right;
    out.hi = y0;
    for (int i = n_scan - 2; i >= 0; --i) {
        const double y = y0 * std::exp(i * ratio);
        if (resid(y) <= 0.0) {
            out.hi = detail::bisect(resid, y, prev, -1);
            break;
        }
        prev = y;
    }
    return out;
}

}  // namespace

Interval phi_sublevel(const VdwParams& par, const FarField& far, double level) {
    const double lo = par.b + par.h;
    const double lo_eval = lo + 1e-9 * (1.0 + lo);
    std::function<double(double)> f = [&](double y) { return phi(par, far, y); };
    return sublevel_hull(f, lo, lo_eval, far.v_bar, level);
}

Interval psi_sublevel(const FarField& far, double level) {
    std::function<double(double)> f = [&](double y) { return psi(far, y); };
    const double lo_eval = 1e-12 * far.theta_bar;
    return sublevel_hull(f, 0.0, lo_eval, far.theta_bar, level);
}

}  // namespace nsac
