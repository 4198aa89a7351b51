#pragma once

#include <span>
#include <vector>

#include "nsac/errors.hpp"

namespace nsac {

// Thomas algorithm for a diagonally dominant tridiagonal system.
// lower has n-1 entries (row i >= 1, coefficient on x[i-1]); upper has n-1
// entries (row i <= n-2, coefficient on x[i+1]); diag and rhs have n entries.
// Throws SingularSystem when the dominance check |d_i| >= |l| + |u| fails or
// a pivot degenerates.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace nsac
