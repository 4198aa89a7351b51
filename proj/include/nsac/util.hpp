#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace nsac {

// Centered second-order derivative on a uniform grid; second-order one-sided
// stencils at the two end nodes.
std::vector<double> gradient(const std::vector<double>& f, double dx);

// Composite trapezoid quadrature over the whole uniform grid.
double trapz(const std::vector<double>& f, double dx);

// Discrete L2 norm sqrt(sum w_i f_i^2) with trapezoid weights.
double l2_norm(const std::vector<double>& f, double dx);

namespace detail {

// Bisection on [lo, hi] given f(lo) has sign sign_lo (+1/-1) and f changes
// sign once. Converges to rel_tol relative width.
template <class F>
double bisect(F&& f, double lo, double hi, int sign_lo, double rel_tol = 1e-13) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * (std::abs(lo) + std::abs(hi)) || mid == lo || mid == hi) break;
        const double fm = f(mid);
        if ((fm > 0.0 ? 1 : -1) == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization on [lo, hi] for a unimodal function.
template <class F>
double golden_min(F&& f, double lo, double hi, double rel_tol = 1e-13) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 300 && hi - lo > rel_tol * (std::abs(lo) + std::abs(hi)); ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail
}  // namespace nsac
