#include "relflow/field_map.hpp"

#include <cmath>
#include <stdexcept>

#include "relflow/numerics.hpp"

namespace relflow {

const char* flow_class_name(FlowClass c) {
    switch (c) {
        case FlowClass::Physical: return "physical";
        case FlowClass::Tachyonic: return "tachyonic";
        case FlowClass::Invalid: return "invalid";
    }
    return "?";
}

double kinetic_scalar(const FieldGradient& g) {
    double s = g.d_t * g.d_t - g.d_r * g.d_r;
    if (g.d_theta != 0.0) {
        if (!(g.r > 0.0))
            throw std::domain_error("kinetic_scalar: angular gradient requires r > 0");
        const double a = g.d_theta / g.r;
        s -= a * a;
    }
    return 0.5 * s;
}

FlowClass classify(double S, double eps) {
    if (S > 0.0 && eps > 0.0) return FlowClass::Physical;
    if (S < 0.0 && eps > 0.0) return FlowClass::Tachyonic;
    return FlowClass::Invalid;
}

FluidState map_to_fluid(const FieldGradient& g, const Eos& eos) {
    FluidState out;
    const double S = kinetic_scalar(g);
    if (S == 0.0 || g.d_t == 0.0) {
        out.eps = nan_value;
        out.p = nan_value;
        out.v_r = nan_value;
        out.v_theta = nan_value;
        out.cls = FlowClass::Invalid;
        return out;
    }

    out.v_r = -g.d_r / g.d_t;
    out.v_theta = (g.d_theta != 0.0) ? -g.d_theta / (g.r * g.r * g.d_t) : 0.0;

    if (S > 0.0) {
        out.p = lagrangian_F(eos, S);
        out.eps = 2.0 * S * lagrangian_F_prime(eos, S) - out.p;
        out.cls = classify(S, out.eps);
        return out;
    }

    // Spacelike gradient: eigenvalue roles of T^{mu}_{nu} swap. Only the
    // stiff Lagrangian extends to S < 0; other families report NaN.
    if (eos.family() == EosFamily::Stiff) {
        out.eps = -S;
        out.p = -S;
    } else {
        out.eps = nan_value;
        out.p = nan_value;
    }
    out.cls = FlowClass::Tachyonic;
    return out;
}

FourVelocity reconstruct_velocity(const FieldGradient& g) {
    const double S = kinetic_scalar(g);
    if (!(S > 0.0))
        throw std::domain_error("reconstruct_velocity: requires a timelike gradient (S > 0)");
    const double sigma = (g.d_t > 0.0) ? 1.0 : -1.0;
    const double inv = sigma / std::sqrt(2.0 * S);
    FourVelocity u;
    u.u0 = g.d_t * inv;                                        // u^0 = u_0
    u.ur = -g.d_r * inv;                                       // u^r = -u_r
    u.utheta = (g.d_theta != 0.0) ? -g.d_theta * inv / (g.r * g.r) : 0.0;
    return u;
}

} // namespace relflow
