#include "relflow/eos.hpp"

#include <cmath>
#include <stdexcept>

#include "relflow/numerics.hpp"

namespace relflow {

Eos Eos::stiff() {
    Eos e;
    e.family_ = EosFamily::Stiff;
    e.kappa_ = 1.0;
    return e;
}

Eos Eos::linear(double kappa) {
    if (!(kappa > 0.0 && kappa < 1.0))
        throw std::invalid_argument("Eos::linear: kappa must lie in (0,1); use stiff() for kappa=1");
    Eos e;
    e.family_ = EosFamily::Linear;
    e.kappa_ = kappa;
    return e;
}

Eos Eos::log_eos(double eps0, double B) {
    if (!(eps0 > 0.0)) throw std::invalid_argument("Eos::log_eos: eps0 must be > 0");
    Eos e;
    e.family_ = EosFamily::LogEos;
    e.eps0_ = eps0;
    e.B_ = B;
    return e;
}

Eos Eos::iterated_log(double eps0, int N) {
    if (!(eps0 > 0.0)) throw std::invalid_argument("Eos::iterated_log: eps0 must be > 0");
    if (N < 1 || N > 20)
        throw std::invalid_argument("Eos::iterated_log: N must lie in [1,20]");
    Eos e;
    e.family_ = EosFamily::IteratedLog;
    e.eps0_ = eps0;
    e.N_ = N;
    return e;
}

double Eos::kappa() const {
    if (family_ != EosFamily::Linear && family_ != EosFamily::Stiff)
        throw std::logic_error("Eos::kappa: not a linear-family EOS");
    return kappa_;
}

double Eos::alpha() const {
    if (family_ != EosFamily::Linear)
        throw std::logic_error("Eos::alpha: not a linear EOS");
    return (1.0 + kappa_) / (2.0 * kappa_);
}

double Eos::eps0() const {
    if (family_ != EosFamily::LogEos && family_ != EosFamily::IteratedLog)
        throw std::logic_error("Eos::eps0: family has no eps0");
    return eps0_;
}

double Eos::log_B() const {
    if (family_ != EosFamily::LogEos) throw std::logic_error("Eos::log_B: not a log EOS");
    return B_;
}

int Eos::iter_N() const {
    if (family_ != EosFamily::IteratedLog)
        throw std::logic_error("Eos::iter_N: not an iterated-log EOS");
    return N_;
}

std::string Eos::family_name() const {
    switch (family_) {
        case EosFamily::Stiff: return "stiff";
        case EosFamily::Linear: return "linear";
        case EosFamily::LogEos: return "log";
        case EosFamily::IteratedLog: return "iterlog";
    }
    return "?";
}

namespace {

void require_positive_S(double S, const char* what) {
    if (!(S > 0.0)) throw std::domain_error(std::string(what) + ": requires S > 0");
}

/// p-series sum_{m=0}^{N} c_m y^{N-m}, c_0 = 1, c_m = -c_{m-1} (N-m+1).
double iterlog_p_poly(int N, double y) {
    double c = 1.0;
    double acc = c;
    for (int m = 1; m <= N; ++m) {
        c = -c * static_cast<double>(N - m + 1);
        acc = acc * y + c;
    }
    return acc;
}

/// eps-series -sum_{m=1}^{N} c_m y^{N-m}.
double iterlog_eps_poly(int N, double y) {
    double c = -static_cast<double>(N);  // c_1
    double acc = -c;
    for (int m = 2; m <= N; ++m) {
        c = -c * static_cast<double>(N - m + 1);
        acc = acc * y - c;
    }
    return acc;
}

} // namespace

double lagrangian_F(const Eos& eos, double S) {
    switch (eos.family()) {
        case EosFamily::Stiff:
            return S;
        case EosFamily::Linear:
            require_positive_S(S, "lagrangian_F(linear)");
            return std::pow(S, eos.alpha());
        case EosFamily::LogEos: {
            require_positive_S(S, "lagrangian_F(log)");
            const double x = std::sqrt(2.0 * S);
            return eos.eps0() * x * (std::log(x) + eos.log_B());
        }
        case EosFamily::IteratedLog: {
            require_positive_S(S, "lagrangian_F(iterlog)");
            const double R = std::sqrt(2.0 * S);
            return eos.eps0() * R * iterlog_p_poly(eos.iter_N(), std::log(R));
        }
    }
    return nan_value;
}

double lagrangian_F_prime(const Eos& eos, double S) {
    switch (eos.family()) {
        case EosFamily::Stiff:
            return 1.0;
        case EosFamily::Linear:
            require_positive_S(S, "lagrangian_F_prime(linear)");
            return eos.alpha() * std::pow(S, eos.alpha() - 1.0);
        case EosFamily::LogEos: {
            require_positive_S(S, "lagrangian_F_prime(log)");
            const double x = std::sqrt(2.0 * S);
            return eos.eps0() * (std::log(x) + eos.log_B() + 1.0) / x;
        }
        case EosFamily::IteratedLog: {
            require_positive_S(S, "lagrangian_F_prime(iterlog)");
            const double R = std::sqrt(2.0 * S);
            return eos.eps0() * ipow(std::log(R), eos.iter_N()) / R;
        }
    }
    return nan_value;
}

double energy_from_S(const Eos& eos, double S) {
    switch (eos.family()) {
        case EosFamily::Stiff:
            return S;
        case EosFamily::Linear:
            require_positive_S(S, "energy_from_S(linear)");
            return std::pow(S, eos.alpha()) / eos.kappa();
        case EosFamily::LogEos:
            require_positive_S(S, "energy_from_S(log)");
            return eos.eps0() * std::sqrt(2.0 * S);
        case EosFamily::IteratedLog: {
            require_positive_S(S, "energy_from_S(iterlog)");
            const double R = std::sqrt(2.0 * S);
            return eos.eps0() * R * iterlog_eps_poly(eos.iter_N(), std::log(R));
        }
    }
    return nan_value;
}

EosPoint eos_point_from_S(const Eos& eos, double S) {
    EosPoint pt;
    pt.p = lagrangian_F(eos, S);
    pt.eps = energy_from_S(eos, S);
    if (eos.family() == EosFamily::IteratedLog) pt.param_R = std::sqrt(2.0 * S);
    pt.cs2 = sound_speed_sq(eos, pt);
    return pt;
}

double sound_speed_sq(const Eos& eos, const EosPoint& at) {
    switch (eos.family()) {
        case EosFamily::Stiff:
            return 1.0;
        case EosFamily::Linear:
            return eos.kappa();
        case EosFamily::LogEos:
            if (!(at.eps > 0.0))
                throw std::domain_error("sound_speed_sq(log): requires eps > 0");
            return std::log(at.eps / eos.eps0()) + eos.log_B() + 1.0;
        case EosFamily::IteratedLog:
            if (!(at.param_R > 0.0))
                throw std::domain_error("sound_speed_sq(iterlog): requires R > 0");
            return std::log(at.param_R) / static_cast<double>(eos.iter_N());
    }
    return nan_value;
}

bool physical_sound_speed(const Eos& eos, const EosPoint& at) {
    const double cs2 = sound_speed_sq(eos, at);
    return cs2 >= 0.0 && cs2 <= 1.0;
}

EosPoint iterated_log_point(double eps0, int N, double R) {
    if (!(eps0 > 0.0)) throw std::invalid_argument("iterated_log_point: eps0 must be > 0");
    if (N < 1 || N > 20) throw std::invalid_argument("iterated_log_point: N must lie in [1,20]");
    if (!(R > 0.0)) throw std::domain_error("iterated_log_point: requires R > 0");
    const double y = std::log(R);
    EosPoint pt;
    pt.param_R = R;
    pt.eps = eps0 * R * iterlog_eps_poly(N, y);
    pt.p = eps0 * R * iterlog_p_poly(N, y);
    pt.cs2 = y / static_cast<double>(N);
    return pt;
}

} // namespace relflow
