#include "nsac/eos.hpp"

#include <cmath>
#include <limits>

#include "nsac/util.hpp"

namespace nsac {

void VdwParams::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x))
            throw ConfigError(std::string("params.") + name + " must be positive and finite");
    };
    positive(a, "a");
    positive(b, "b");
    positive(R, "R");
    positive(h, "h");
    positive(epsilon, "epsilon");
    positive(kappa_tilde, "kappa_tilde");
    positive(c_v, "c_v");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw ConfigError("params.beta must be nonnegative and finite");
    if (!std::isfinite(e_int0)) throw ConfigError("params.e_int0 must be finite");
}

std::string to_string(Region r) {
    switch (r) {
        case Region::Forbidden: return "Forbidden";
        case Region::Stable: return "Stable";
        case Region::Metastable: return "Metastable";
        case Region::Unstable: return "Unstable";
    }
    return "?";
}

double pressure(const VdwParams& par, double v, double theta) {
    if (!(theta > 0.0)) throw DomainError("pressure: theta must be positive");
    if (!(v > par.b + par.h)) throw DomainError("pressure: v <= b+h is outside the admissible domain");
    return -par.a / (v * v) + par.R * theta / (v - par.b);
}

PressureDerivatives pressure_derivatives(const VdwParams& par, double v, double theta) {
    if (!(theta > 0.0)) throw DomainError("pressure_derivatives: theta must be positive");
    if (!(v > par.b + par.h))
        throw DomainError("pressure_derivatives: v <= b+h is outside the admissible domain");
    const double w = v - par.b;
    return {2.0 * par.a / (v * v * v) - par.R * theta / (w * w), par.R / w};
}

double internal_energy(const VdwParams& par, double v, double theta) {
    if (!(theta > 0.0)) throw DomainError("internal_energy: theta must be positive");
    if (!(v > par.b + par.h))
        throw DomainError("internal_energy: v <= b+h is outside the admissible domain");
    return par.c_v * theta - par.a / v + par.e_int0;
}

double conductivity(const VdwParams& par, double theta) {
    if (!(theta > 0.0)) throw DomainError("conductivity: theta must be positive");
    return par.kappa_tilde * std::pow(theta, par.beta);
}

CriticalPoint critical_point(const VdwParams& par) {
    return {8.0 * par.a / (27.0 * par.R * par.b), 3.0 * par.b, par.a / (27.0 * par.b * par.b)};
}

namespace {

// dp/dv = 0  <=>  2a(v-b)^2 - R*theta*v^3 = 0; polynomial form is finite on
// [b, +inf) so brackets may touch v = b.
SpinodalPoints spinodal_roots(const VdwParams& par, double theta) {
    auto resid = [&](double v) {
        const double w = v - par.b;
        return 2.0 * par.a * w * w - par.R * theta * v * v * v;
    };
    const double vc = 3.0 * par.b;
    // resid < 0 at v=b, > 0 at v=3b for subcritical theta, < 0 again at infinity
    const double v_alpha = detail::bisect(resid, par.b, vc, -1);
    double hi = 2.0 * vc;
    while (resid(hi) > 0.0) hi *= 2.0;
    const double v_beta = detail::bisect(resid, vc, hi, +1);
    return {v_alpha, v_beta};
}

}  // namespace

SpinodalPoints spinodal(const VdwParams& par, double theta) {
    if (!(theta > 0.0)) throw DomainError("spinodal: theta must be positive");
    const CriticalPoint cp = critical_point(par);
    if (theta >= cp.theta_c) throw NoSpinodal("spinodal: isotherm is monotone for theta >= theta_c");
    const SpinodalPoints sp = spinodal_roots(par, theta);
    if (sp.v_alpha <= par.b + par.h)
        throw CutoffConflict("spinodal: v_alpha <= b+h, spinodal hidden by the volume cutoff");
    return sp;
}

namespace {

// Antiderivative of p(.,theta): int p dv = R*theta*ln(v-b) + a/v.
double pressure_antiderivative(const VdwParams& par, double v, double theta) {
    return par.R * theta * std::log(v - par.b) + par.a / v;
}

// Limit of p as v -> (b+h)+ (finite, the +inf branch starts at v <= b+h).
double pressure_at_cutoff(const VdwParams& par, double theta) {
    const double v = par.b + par.h;
    return -par.a / (v * v) + par.R * theta / par.h;
}

// Root of p(v,theta) = p_eq on the descending liquid branch (b+h, v_alpha).
double coexistence_left(const VdwParams& par, double theta, double p_eq, double v_alpha) {
    if (pressure_at_cutoff(par, theta) <= p_eq)
        throw CutoffConflict("maxwell_construction: liquid coexistence volume hidden by the cutoff");
    auto g = [&](double v) { return pressure(par, v, theta) - p_eq; };
    return detail::bisect(g, par.b + par.h, v_alpha, +1);
}

// Root of p(v,theta) = p_eq on the descending vapor branch (v_beta, +inf).
double coexistence_right(const VdwParams& par, double theta, double p_eq, double v_beta) {
    auto g = [&](double v) { return pressure(par, v, theta) - p_eq; };
    double hi = 2.0 * v_beta;
    while (g(hi) > 0.0) hi *= 2.0;
    return detail::bisect(g, v_beta, hi, +1);
}

}  // namespace

IsothermAnalysis maxwell_construction(const VdwParams& par, double theta) {
    const SpinodalPoints sp = spinodal(par, theta);
    const double p_min = pressure(par, sp.v_alpha, theta);
    const double p_max = pressure(par, sp.v_beta, theta);
    double lo = std::max(0.0, p_min);
    double hi = p_max;
    if (!(lo < hi))
        throw NoPositiveEquilibrium("maxwell_construction: empty positive-pressure bracket");

    // Equal-area residual; strictly decreasing in p_eq.
    auto area = [&](double p_eq) {
        const double vl = coexistence_left(par, theta, p_eq, sp.v_alpha);
        const double vr = coexistence_right(par, theta, p_eq, sp.v_beta);
        return pressure_antiderivative(par, vr, theta) - pressure_antiderivative(par, vl, theta) -
               p_eq * (vr - vl);
    };
    const double pad = 1e-12 * (hi - lo);
    if (area(lo + pad) <= 0.0)
        throw NoPositiveEquilibrium("maxwell_construction: equal-area pressure is not positive");
    if (area(hi - pad) >= 0.0)
        throw NoPositiveEquilibrium("maxwell_construction: equal-area residual has no sign change");
    const double p_eq = detail::bisect(area, lo + pad, hi - pad, +1);
    const double v_star = coexistence_left(par, theta, p_eq, sp.v_alpha);
    const double v_sup = coexistence_right(par, theta, p_eq, sp.v_beta);
    return {theta, sp.v_alpha, sp.v_beta, v_star, v_sup, p_eq};
}

Region classify_state(const VdwParams& par, double v, double theta) {
    if (!(theta > 0.0)) throw DomainError("classify_state: theta must be positive");
    if (v <= par.b + par.h) return Region::Forbidden;
    const CriticalPoint cp = critical_point(par);
    if (theta >= cp.theta_c) return Region::Stable;

    double v_alpha, v_beta, v_star, v_sup;
    try {
        const IsothermAnalysis iso = maxwell_construction(par, theta);
        v_alpha = iso.v_alpha;
        v_beta = iso.v_beta;
        v_star = iso.v_star;
        v_sup = iso.v_sup;
    } catch (const Error&) {
        // Cutoff or equal-area degeneracy: the binodal collapses onto the
        // spinodal and classification keeps its total-partition contract.
        const SpinodalPoints sp = spinodal_roots(par, theta);
        v_alpha = sp.v_alpha;
        v_beta = sp.v_beta;
        v_star = sp.v_alpha;
        v_sup = sp.v_beta;
    }

    if (v > v_alpha && v < v_beta) return Region::Unstable;
    if ((v >= v_star && v <= v_alpha) || (v >= v_beta && v <= v_sup)) return Region::Metastable;
    return Region::Stable;
}

bool admissible_far_field(const VdwParams& par, double v_bar, double theta_bar) {
    if (!(theta_bar > 0.0) || !(v_bar > par.b + par.h)) return false;
    return classify_state(par, v_bar, theta_bar) == Region::Stable;
}

}  // namespace nsac
