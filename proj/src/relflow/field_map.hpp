#pragma once

#include "relflow/eos.hpp"

namespace relflow {

/// Admissibility classification of a flow point (metric signature
/// diag(1,-1,-1,-1), c = 1):
///   Physical  -- timelike gradient and positive energy (S > 0, eps > 0)
///   Tachyonic -- spacelike gradient, formally superluminal flow (S < 0)
///   Invalid   -- everything else (null gradient, eps <= 0, ...)
enum class FlowClass { Physical = 0, Tachyonic = 1, Invalid = 2 };

const char* flow_class_name(FlowClass c);

/// First derivatives of the scalar potential at a spacetime point.
/// d_r is the derivative along the radial (or planar Cartesian) axis;
/// d_theta is nonzero only for axisymmetric configurations, which require
/// r > 0.
struct FieldGradient {
    double d_t = 0.0;
    double d_r = 0.0;
    double d_theta = 0.0;
    double t = 0.0;
    double r = 0.0;
    double theta = 0.0;
};

/// Hydrodynamic state at a point. v_r = u^r/u^0 is dimensionless, v_theta
/// = u^theta/u^0 is an angular coordinate velocity (1/time).
struct FluidState {
    double eps = 0.0;
    double p = 0.0;
    double v_r = 0.0;
    double v_theta = 0.0;
    FlowClass cls = FlowClass::Invalid;
};

/// Contravariant four-velocity components (u^t, u^r, u^theta).
struct FourVelocity {
    double u0 = 0.0;
    double ur = 0.0;
    double utheta = 0.0;
};

/// Kinetic scalar S = (1/2) phi_{,a} phi^{,a}
///   = (1/2) [d_t^2 - d_r^2 - (d_theta/r)^2].
/// The angular term is dropped when d_theta == 0 (planar/symmetric case).
double kinetic_scalar(const FieldGradient& g);

/// Physical iff S>0 and eps>0; Tachyonic iff S<0 and eps>0; else Invalid.
FlowClass classify(double S, double eps);

/// Map a field gradient to the fluid state.
///
/// Timelike gradient (S > 0): p = F(S), eps = 2 S F'(S) - F(S),
/// u_a = sigma * phi_{,a} (2S)^{-1/2} with sigma chosen so u^0 > 0;
/// v_r = -d_r/d_t, v_theta = -d_theta/(r^2 d_t). Class is Physical when
/// eps > 0, Invalid otherwise.
///
/// Spacelike gradient (S < 0): the gradient direction is a spacelike
/// eigenvector of T^{mu}_{nu}, so the eigenvalue roles swap:
/// eps = -F(S), p = F(S) - 2 S F'(S) (for the stiff EOS both equal -S,
/// reproducing the rescaled tachyonic branches). Velocities are the formal
/// gradient ratios, |v| > 1. Class is Tachyonic.
///
/// Null gradient (S == 0) or d_t == 0: class Invalid.
FluidState map_to_fluid(const FieldGradient& g, const Eos& eos);

/// Unit four-velocity reconstructed from a timelike gradient (requires
/// S > 0), future-directed (u^0 > 0).
FourVelocity reconstruct_velocity(const FieldGradient& g);

} // namespace relflow
