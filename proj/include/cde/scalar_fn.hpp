#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cde/errors.hpp"
#include "cde/spline.hpp"

namespace cde {

enum class FnKind { constant, step_pulse, sinusoid, exp_decay, tabulated };

inline const char* to_string(FnKind k) {
    switch (k) {
        case FnKind::constant: return "constant";
        case FnKind::step_pulse: return "step-pulse";
        case FnKind::sinusoid: return "sinusoid";
        case FnKind::exp_decay: return "exp-decay";
        default: return "tabulated";
    }
}

/// Serializable time- or space-function descriptor.
///
/// Every kind evaluates a value and a first derivative anywhere on its domain.
/// Tabulated data is interpolated by a clamped cubic spline (end slopes from
/// one-sided 3-point fits) and held constant beyond its abscissae. The step
/// pulse is the one kind with jump discontinuities; it reports them through
/// breakpoints() so quadratures can seed panel edges there.
class ScalarFn {
public:
    static ScalarFn constant(double c) {
        ScalarFn f(FnKind::constant);
        f.p_ = {c};
        return f;
    }

    /// base outside [t_on, t_off), level inside.
    static ScalarFn step_pulse(double base, double level, double t_on, double t_off) {
        if (!(t_off > t_on)) throw std::invalid_argument("step-pulse needs t_off > t_on");
        ScalarFn f(FnKind::step_pulse);
        f.p_ = {base, level, t_on, t_off};
        return f;
    }

    /// amplitude * sin(omega * t + phase) + offset
    static ScalarFn sinusoid(double amplitude, double omega, double phase = 0.0,
                             double offset = 0.0) {
        ScalarFn f(FnKind::sinusoid);
        f.p_ = {amplitude, omega, phase, offset};
        return f;
    }

    /// amplitude * exp(-rate * t) + offset
    static ScalarFn exp_decay(double amplitude, double rate, double offset = 0.0) {
        ScalarFn f(FnKind::exp_decay);
        f.p_ = {amplitude, rate, offset};
        return f;
    }

    static ScalarFn tabulated(std::vector<double> xs, std::vector<double> ys) {
        if (xs.empty() || ys.empty()) throw EmptyTable();
        if (xs.size() != ys.size()) throw UnsortedTable();
        ScalarFn f(FnKind::tabulated);
        f.spline_ = Spline::with_estimated_slopes(std::move(xs), std::move(ys));
        return f;
    }

    FnKind kind() const { return kind_; }

    double value(double x) const { return eval(x, 0); }
    double derivative(double x) const { return eval(x, 1); }

    double eval(double x, int order) const {
        switch (kind_) {
            case FnKind::constant:
                return order == 0 ? p_[0] : 0.0;
            case FnKind::step_pulse:
                if (order != 0) return 0.0;
                return (x >= p_[2] && x < p_[3]) ? p_[1] : p_[0];
            case FnKind::sinusoid:
                return order == 0 ? p_[0] * std::sin(p_[1] * x + p_[2]) + p_[3]
                                  : p_[0] * p_[1] * std::cos(p_[1] * x + p_[2]);
            case FnKind::exp_decay:
                return order == 0 ? p_[0] * std::exp(-p_[1] * x) + p_[2]
                                  : -p_[0] * p_[1] * std::exp(-p_[1] * x);
            default:
                if (x < spline_.x_min()) return order == 0 ? spline_.value(spline_.x_min()) : 0.0;
                if (x > spline_.x_max()) return order == 0 ? spline_.value(spline_.x_max()) : 0.0;
                return spline_.eval(x, order);
        }
    }

    /// Jump and knot locations, for seeding quadrature panels.
    std::vector<double> breakpoints() const {
        switch (kind_) {
            case FnKind::step_pulse: return {p_[2], p_[3]};
            case FnKind::tabulated: return spline_.knots();
            default: return {};
        }
    }

    bool is_constant() const {
        switch (kind_) {
            case FnKind::constant: return true;
            case FnKind::step_pulse: return p_[0] == p_[1];
            case FnKind::sinusoid: return p_[0] == 0.0;
            case FnKind::exp_decay: return p_[0] == 0.0;
            default: {
                const auto& xs = spline_.knots();
                for (const double x : xs)
                    if (spline_.value(x) != spline_.value(xs.front())) return false;
                return xs.size() == 1 || spline_.derivative(0.5 * (xs.front() + xs.back())) == 0.0;
            }
        }
    }

    /// Stays bounded as the argument goes to -infinity (needed by the pure
    /// boundary-value solution, whose history integral reaches all the way back).
    bool bounded_backward() const {
        return !(kind_ == FnKind::exp_decay && p_[0] != 0.0 && p_[1] > 0.0);
    }

    const std::vector<double>& raw_params() const { return p_; }

private:
    explicit ScalarFn(FnKind k) : kind_(k) {}

    FnKind kind_;
    std::vector<double> p_;
    Spline spline_;
};

/// Spec-level evaluation entry point: order 0 = value, 1 = first derivative.
inline double eval_fn(const ScalarFn& f, double x, int order) { return f.eval(x, order); }

}  // namespace cde
