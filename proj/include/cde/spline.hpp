#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "cde/errors.hpp"
#include "cde/tridiagonal.hpp"

namespace cde {

/// C2 cubic interpolating spline in moment (second-derivative) form.
///
/// Outside the knot range, the spline evaluates the polynomial of the nearest
/// end segment; range policies (constant hold, error) belong to the wrappers
/// that own the data.
class Spline {
public:
    Spline() = default;

    /// Clamped spline with prescribed end slopes.
    static Spline clamped(std::vector<double> xs, std::vector<double> ys, double slope_lo,
                          double slope_hi) {
        return Spline(std::move(xs), std::move(ys), slope_lo, slope_hi);
    }

    /// Natural spline (zero end curvature).
    static Spline natural(std::vector<double> xs, std::vector<double> ys) {
        return Spline(std::move(xs), std::move(ys), std::nullopt, std::nullopt);
    }

    /// Clamped spline with end slopes estimated from one-sided 3-point fits.
    /// This is the default for tabulated data, where only samples are known.
    static Spline with_estimated_slopes(std::vector<double> xs, std::vector<double> ys) {
        check_table(xs, ys);
        if (xs.size() < 2) return Spline(std::move(xs), std::move(ys), 0.0, 0.0);
        const double s_lo = one_sided_slope(xs, ys, false);
        const double s_hi = one_sided_slope(xs, ys, true);
        return Spline(std::move(xs), std::move(ys), s_lo, s_hi);
    }

    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    const std::vector<double>& knots() const { return xs_; }

    double value(double x) const { return eval(x, 0); }
    double derivative(double x) const { return eval(x, 1); }
    double second(double x) const { return eval(x, 2); }

    double eval(double x, int order) const {
        if (xs_.size() == 1) return order == 0 ? ys_[0] : 0.0;
        const size_t i = segment(x);
        const double h = xs_[i + 1] - xs_[i];
        const double u = x - xs_[i];       // distance from left knot
        const double w = xs_[i + 1] - x;   // distance to right knot
        switch (order) {
            case 0:
                return m_[i] * w * w * w / (6.0 * h) + m_[i + 1] * u * u * u / (6.0 * h) +
                       (ys_[i] / h - m_[i] * h / 6.0) * w + (ys_[i + 1] / h - m_[i + 1] * h / 6.0) * u;
            case 1:
                return -m_[i] * w * w / (2.0 * h) + m_[i + 1] * u * u / (2.0 * h) +
                       (ys_[i + 1] - ys_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
            default:
                return m_[i] * w / h + m_[i + 1] * u / h;
        }
    }

private:
    Spline(std::vector<double> xs, std::vector<double> ys, std::optional<double> s_lo,
           std::optional<double> s_hi)
        : xs_(std::move(xs)), ys_(std::move(ys)) {
        check_table(xs_, ys_);
        const size_t n = xs_.size();
        m_.assign(n, 0.0);
        if (n < 2) return;
        if (n == 2 && !s_lo) return;  // natural on one segment: straight line

        std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            const double hl = xs_[i] - xs_[i - 1];
            const double hr = xs_[i + 1] - xs_[i];
            lower[i] = hl / 6.0;
            diag[i] = (hl + hr) / 3.0;
            upper[i] = hr / 6.0;
            rhs[i] = (ys_[i + 1] - ys_[i]) / hr - (ys_[i] - ys_[i - 1]) / hl;
        }
        if (s_lo) {
            const double h0 = xs_[1] - xs_[0];
            diag[0] = h0 / 3.0;
            upper[0] = h0 / 6.0;
            rhs[0] = (ys_[1] - ys_[0]) / h0 - *s_lo;
            const double hn = xs_[n - 1] - xs_[n - 2];
            lower[n - 1] = hn / 6.0;
            diag[n - 1] = hn / 3.0;
            rhs[n - 1] = *s_hi - (ys_[n - 1] - ys_[n - 2]) / hn;
        } else {
            diag[0] = 1.0;
            diag[n - 1] = 1.0;
        }
        m_ = solve_tridiagonal(lower, diag, upper, rhs);
    }

    static void check_table(const std::vector<double>& xs, const std::vector<double>& ys) {
        if (xs.empty() || xs.size() != ys.size()) throw EmptyTable();
        for (size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i] > xs[i - 1])) throw UnsortedTable();
    }

    static double one_sided_slope(const std::vector<double>& xs, const std::vector<double>& ys,
                                  bool at_end) {
        const size_t n = xs.size();
        if (n == 2) return (ys[1] - ys[0]) / (xs[1] - xs[0]);
        // derivative of the parabola through the three nearest samples
        size_t i0 = at_end ? n - 3 : 0;
        const double x0 = xs[i0], x1 = xs[i0 + 1], x2 = xs[i0 + 2];
        const double y0 = ys[i0], y1 = ys[i0 + 1], y2 = ys[i0 + 2];
        const double xt = at_end ? x2 : x0;
        const double d01 = (y1 - y0) / (x1 - x0);
        const double d12 = (y2 - y1) / (x2 - x1);
        const double c2 = (d12 - d01) / (x2 - x0);
        return d01 + c2 * (2.0 * xt - x0 - x1);
    }

    size_t segment(double x) const {
        size_t lo = 0, hi = xs_.size() - 1;
        if (x <= xs_.front()) return 0;
        if (x >= xs_.back()) return hi - 1;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            (xs_[mid] <= x ? lo : hi) = mid;
        }
        return lo;
    }

    std::vector<double> xs_, ys_;
    std::vector<double> m_;  // second derivatives at knots
};

}  // namespace cde
