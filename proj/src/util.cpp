#include "nsac/util.hpp"

namespace nsac {

std::vector<double> gradient(const std::vector<double>& f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> g(n, 0.0);
    if (n < 3) return g;
    const double inv2 = 1.0 / (2.0 * dx);
    g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2;
    for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (f[i + 1] - f[i - 1]) * inv2;
    g[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2;
    return g;
}

double trapz(const std::vector<double>& f, double dx) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    double s = 0.5 * (f[0] + f[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += f[i];
    return s * dx;
}

double l2_norm(const std::vector<double>& f, double dx) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    double s = 0.5 * (f[0] * f[0] + f[n - 1] * f[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += f[i] * f[i];
    return std::sqrt(s * dx);
}

}  // namespace nsac
