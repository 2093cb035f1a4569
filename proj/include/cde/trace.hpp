#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cde/errors.hpp"
#include "cde/spline.hpp"

namespace cde {

enum class TraceProvenance { computed, measured };

/// Time-sampled exit concentration C_E(t).
///
/// A clamped cubic spline interpolates the samples exactly and supplies
/// dC_E/dt everywhere on the window; downstream code cannot tell a computed
/// trace from a measured one. Evaluation before the first sample throws
/// TraceOutOfRange; past the last sample the end value is held (the window is
/// expected to cover the solve).
class ExitTrace {
public:
    ExitTrace() = default;

    ExitTrace(std::vector<double> times, std::vector<double> values, TraceProvenance origin)
        : times_(std::move(times)), provenance_(origin) {
        if (times_.empty() || values.empty()) throw EmptyTable();
        if (times_.size() != values.size()) throw UnsortedTable();
        spline_ = Spline::with_estimated_slopes(times_, std::move(values));
    }

    double t_first() const { return times_.front(); }
    double t_last() const { return times_.back(); }
    const std::vector<double>& times() const { return times_; }
    TraceProvenance provenance() const { return provenance_; }

    double value(double t) const {
        check(t);
        if (t >= times_.back()) return spline_.value(times_.back());
        return spline_.value(t);
    }

    double derivative(double t) const {
        check(t);
        if (t > times_.back()) return 0.0;
        return spline_.derivative(t);
    }

    bool is_constant(double tol = 0.0) const {
        for (const double t : times_)
            if (std::abs(spline_.value(t) - spline_.value(times_.front())) > tol) return false;
        return true;
    }

private:
    void check(double t) const {
        // tiny slack: callers legitimately evaluate at t0 reconstructed from arithmetic
        const double span = times_.back() - times_.front();
        const double slack = 1e-12 * (span > 0.0 ? span : 1.0) + 1e-300;
        if (t < times_.front() - slack) throw TraceOutOfRange(t);
    }

    std::vector<double> times_;
    Spline spline_;
    TraceProvenance provenance_ = TraceProvenance::computed;
};

}  // namespace cde
