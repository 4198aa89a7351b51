#pragma once

#include <functional>

#include "nsac/state.hpp"

namespace nsac {

// Per-equation source terms added to the right-hand sides while stepping.
struct Forcing {
    std::function<double(double x, double t)> f_v;
    std::function<double(double x, double t)> f_u;
    std::function<double(double x, double t)> f_theta;
    std::function<double(double x, double t)> f_chi;
    explicit operator bool() const { return static_cast<bool>(f_v); }
};

// Manufactured solution for the convergence harness. The exact fields are a
// Gaussian-envelope wave packet riding on the far field,
//   v     = v_bar  * (1 + Av * g(x) cos(w t))
//   u     =          Au * g(x) sin(w t)
//   theta = th_bar * (1 + At * g(x) cos(w t))
//   chi   = 1 - Ac * g(x)^2 * (1 + cos(w t)) / 2
// with g(x) = exp(-x^2/(2 sigma^2)) cos(k x); the forcing terms are the exact
// residuals of the governing equations on these fields.
struct MmsProblem {
    VdwParams params;
    FarField far;
    int k = 1;
    double omega = 3.0;
    double sigma = 1.8;
    double amp_v = 0.1;
    double amp_u = 0.1;
    double amp_theta = 0.1;
    double amp_chi = 0.5;

    double v(double x, double t) const;
    double u(double x, double t) const;
    double theta(double x, double t) const;
    double chi(double x, double t) const;

    State exact_state(const Grid1D& grid, double t) const;
    Forcing forcing() const;
};

}  // namespace nsac
