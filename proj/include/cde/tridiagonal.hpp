#pragma once

#include <cmath>
#include <vector>

#include "cde/errors.hpp"

namespace cde {

/// Thomas recurrence for a tridiagonal system. lower[0] and upper[n-1] are
/// unused. No pivoting: callers guarantee diagonal dominance (the implicit
/// transport discretization does under its cell-Peclet guard).
inline std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                             const std::vector<double>& diag,
                                             const std::vector<double>& upper,
                                             const std::vector<double>& rhs) {
    const size_t n = diag.size();
    if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n)
        throw LinearSolveFailure("tridiagonal size mismatch");

    std::vector<double> c(n), d(n), x(n);
    if (diag[0] == 0.0 || !std::isfinite(diag[0])) throw LinearSolveFailure("zero pivot at row 0");
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (size_t i = 1; i < n; ++i) {
        const double denom = diag[i] - lower[i] * c[i - 1];
        if (denom == 0.0 || !std::isfinite(denom))
            throw LinearSolveFailure("zero pivot at row " + std::to_string(i));
        c[i] = upper[i] / denom;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    x[n - 1] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

}  // namespace cde
