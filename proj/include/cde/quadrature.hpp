#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cde/errors.hpp"

namespace cde {

/// Tolerance contract for adaptive Simpson integration.
///
/// rel_tol is measured against max(|whole-interval estimate|, scale_hint), so
/// integrands with heavy cancellation (oscillatory projections) should pass a
/// scale_hint of roughly max|f| * (b - a). Exceeding max_depth raises
/// QuadratureNotConverged instead of silently returning a degraded value.
struct QuadSpec {
    double rel_tol = 1e-9;
    double scale_hint = 0.0;
    int max_depth = 30;
    const char* label = "integral";
};

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double b, double fa, double fm, double fb, double whole,
                       double eps, int depth, const QuadSpec& spec) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth >= spec.max_depth) throw QuadratureNotConverged(spec.label);
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1, spec) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1, spec);
}

template <class F>
double simpson_segment(F& f, double a, double b, double eps, const QuadSpec& spec) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, eps, 0, spec);
}

}  // namespace detail

/// Integrates f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, const QuadSpec& spec = {}) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double rough =
        std::abs((b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b)));
    const double scale = std::max({rough, spec.scale_hint, 1e-300});
    return detail::simpson_segment(f, a, b, spec.rel_tol * scale, spec);
}

/// Integrates f over [pts.front(), pts.back()] with forced panel boundaries at
/// every interior point. Callers seed known kinks, jumps, and kernel peaks
/// here so the adaptive refinement never has to discover them.
template <class F>
double integrate_seeded(F&& f, std::vector<double> pts, const QuadSpec& spec = {}) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) return 0.0;

    double rough = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        rough += std::abs((b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b)));
    }
    const double scale = std::max({rough, spec.scale_hint, 1e-300});
    const double eps = spec.rel_tol * scale / static_cast<double>(pts.size() - 1);

    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] < pts[i + 1]) total += detail::simpson_segment(f, pts[i], pts[i + 1], eps, spec);
    return total;
}

}  // namespace cde
