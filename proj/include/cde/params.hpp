#pragma once

#include <cmath>

#include "cde/errors.hpp"

namespace cde {

/// Physical constants of the transport problem, one coherent unit system.
/// R scales the time derivative (linear sorption), D and v are diffusion and
/// fluid velocity, mu is first-order decay, gamma zeroth-order production,
/// ell the domain length, t0 the initial time.
struct PhysicalParams {
    double R = 1.0;
    double D = 1.0;
    double v = 1.0;
    double mu = 0.0;
    double gamma = 0.0;
    double ell = 1.0;
    double t0 = 0.0;
};

/// Exponential change-of-variables parameters (inverse length, inverse time).
struct TransformParams {
    double r = 0.0;
    double s = 0.0;
};

inline void validate_params(const PhysicalParams& p) {
    if (!(p.R > 0.0) || !std::isfinite(p.R)) throw NonPositiveParam("R");
    if (!(p.D > 0.0) || !std::isfinite(p.D)) throw NonPositiveParam("D");
    if (!(p.v > 0.0) || !std::isfinite(p.v)) throw NonPositiveParam("v");
    if (!(p.ell > 0.0) || !std::isfinite(p.ell)) throw NonPositiveParam("ell");
    if (p.mu < 0.0 || !std::isfinite(p.mu)) throw NonPositiveParam("mu");
    if (p.gamma < 0.0 || !std::isfinite(p.gamma)) throw NonPositiveParam("gamma");
    if (!std::isfinite(p.t0)) throw NonPositiveParam("t0");
    if (p.gamma > 0.0 && p.mu == 0.0) throw GammaWithoutDecay();
}

/// r = v/(2D), s = (v^2/(4D) + mu)/R. The identity s - (D/R) r^2 = mu/R holds
/// to rounding and is what keeps the transformed problem's negative mode decaying
/// at exactly mu/R in the physical variable.
inline TransformParams derive_transform(const PhysicalParams& p) {
    TransformParams tp;
    tp.r = p.v / (2.0 * p.D);
    tp.s = (p.v * p.v / (4.0 * p.D) + p.mu) / p.R;
    return tp;
}

/// Equilibrium production level; defined as 0 when production is absent, so
/// the mu = 0, gamma = 0 case stays regular.
inline double gamma_over_mu(const PhysicalParams& p) {
    return p.gamma == 0.0 ? 0.0 : p.gamma / p.mu;
}

}  // namespace cde
