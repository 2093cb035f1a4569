#pragma once

#include <optional>

#include "cde/params.hpp"
#include "cde/scalar_fn.hpp"
#include "cde/trace.hpp"

namespace cde {

enum class ExitMode { computed, measured };

/// How the initial profile continues past x = ell. The half-line exit problem
/// needs initial data on all of x > 0; the physical profile only covers
/// [0, ell], so the continuation is an explicit modeling choice.
enum class PhiExtension { constant_hold, zero, custom };

struct Scenario {
    PhysicalParams params;
    ScalarFn g = ScalarFn::constant(0.0);    // inlet concentration, function of time
    ScalarFn phi = ScalarFn::constant(0.0);  // initial profile, function of space
    ExitMode exit_mode = ExitMode::computed;
    std::optional<ExitTrace> measured_trace;  // required when exit_mode == measured
    PhiExtension phi_extension = PhiExtension::constant_hold;
    std::optional<ScalarFn> extension_fn;  // required when phi_extension == custom
};

/// Checks every invariant and returns the scenario unchanged, or throws a
/// diagnostic naming the violated one.
inline Scenario validate_scenario(Scenario s) {
    validate_params(s.params);
    if (s.exit_mode == ExitMode::measured) {
        if (!s.measured_trace) throw EmptyTable();
        const double span = s.measured_trace->t_last() - s.measured_trace->t_first();
        if (s.measured_trace->t_first() > s.params.t0 + 1e-12 * std::max(1.0, std::abs(span)))
            throw TraceOutOfRange(s.params.t0);
    }
    if (s.phi_extension == PhiExtension::custom && !s.extension_fn)
        throw std::invalid_argument("phi_extension = custom requires an extension function");
    return s;
}

/// Initial profile on [0, infinity): phi itself up to ell, then the chosen
/// extension. order 0 = value, 1 = spatial derivative.
inline double phi_extended(const Scenario& s, double x, int order) {
    if (x <= s.params.ell) return s.phi.eval(x, order);
    switch (s.phi_extension) {
        case PhiExtension::constant_hold:
            return order == 0 ? s.phi.value(s.params.ell) : 0.0;
        case PhiExtension::zero:
            return 0.0;
        default:
            return s.extension_fn->eval(x, order);
    }
}

}  // namespace cde
