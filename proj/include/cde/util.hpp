#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace cde {

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<size_t>(n));
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = lo + h * i;
    xs.back() = hi;
    return xs;
}

/// Chebyshev-Lobatto nodes on [lo, hi], endpoints included, ascending.
inline std::vector<double> chebyshev_nodes(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(M_PI * (n - 1 - i) / (n - 1));
        xs[static_cast<size_t>(i)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * c;
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

/// Round-trip decimal formatting, locale-independent. Used for all CSV and
/// manifest output so repeated runs are byte-identical.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace cde
