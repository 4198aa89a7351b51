#include "nsac/tridiag.hpp"

#include <cmath>
#include <string>

namespace nsac {

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (rhs.size() != n || lower.size() + 1 != n || upper.size() + 1 != n)
        throw SingularSystem("solve_tridiagonal: inconsistent band sizes");

    for (std::size_t i = 0; i < n; ++i) {
        const double l = (i > 0) ? std::abs(lower[i - 1]) : 0.0;
        const double u = (i + 1 < n) ? std::abs(upper[i]) : 0.0;
        if (std::abs(diag[i]) < l + u)
            throw SingularSystem("solve_tridiagonal: diagonal dominance fails in row " +
                                 std::to_string(i));
    }

    std::vector<double> c_star(n, 0.0), x(n, 0.0);
    double piv = diag[0];
    if (piv == 0.0) throw SingularSystem("solve_tridiagonal: zero pivot in row 0");
    c_star[0] = (n > 1) ? upper[0] / piv : 0.0;
    x[0] = rhs[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = diag[i] - lower[i - 1] * c_star[i - 1];
        if (std::abs(piv) <= 1e-300 * (std::abs(diag[i]) + 1.0))
            throw SingularSystem("solve_tridiagonal: vanishing pivot in row " + std::to_string(i));
        if (i + 1 < n) c_star[i] = upper[i] / piv;
        x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_star[i] * x[i + 1];
    return x;
}

}  // namespace nsac
