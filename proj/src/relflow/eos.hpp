#pragma once

#include <string>

namespace relflow {

enum class EosFamily { Stiff, Linear, LogEos, IteratedLog };

/// One-parametric equations of state p = p(eps) together with the scalar
/// -field Lagrangians F(S) that generate them:
///
///   Stiff        p = eps,                     F(S) = S
///   Linear       p = kappa*eps, 0<kappa<1,    F(S) = S^alpha, alpha=(1+kappa)/(2*kappa)
///   LogEos       p = eps*[ln(eps/eps0)+B],    F(S) = eps0*x*(ln x + B),          x = sqrt(2S)
///   IteratedLog  parametric in R = sqrt(2S):  F(S) = eps0*R*sum_{m=0}^{N} (-1)^m N!/(N-m)! (ln R)^{N-m}
///
/// The stiff EOS is its own family; Linear may assume kappa < 1 strictly.
class Eos {
public:
    static Eos stiff();
    static Eos linear(double kappa);              ///< requires 0 < kappa < 1
    static Eos log_eos(double eps0, double B);    ///< requires eps0 > 0
    static Eos iterated_log(double eps0, int N);  ///< requires eps0 > 0, 1 <= N <= 20

    EosFamily family() const { return family_; }
    double kappa() const;    ///< Linear only
    double alpha() const;    ///< Linear only: (1+kappa)/(2*kappa)
    double eps0() const;     ///< LogEos / IteratedLog
    double log_B() const;    ///< LogEos
    int iter_N() const;      ///< IteratedLog

    bool is_stiff() const { return family_ == EosFamily::Stiff; }
    std::string family_name() const;

private:
    Eos() = default;
    EosFamily family_ = EosFamily::Stiff;
    double kappa_ = 1.0;
    double eps0_ = 0.0;
    double B_ = 0.0;
    int N_ = 0;
};

/// A point on an EOS curve. param_R is meaningful only for IteratedLog,
/// where R = sqrt(2S) parametrizes the curve; it is 0 otherwise.
/// Invariant (IteratedLog): eps + p = eps0 * R * (ln R)^N.
struct EosPoint {
    double eps = 0.0;
    double p = 0.0;
    double cs2 = 0.0;
    double param_R = 0.0;
};

/// Lagrangian F(S). Domain error when S <= 0 where a logarithm or a
/// non-integer power is required (Linear, LogEos, IteratedLog).
double lagrangian_F(const Eos& eos, double S);

/// Analytic dF/dS (never by differencing).
double lagrangian_F_prime(const Eos& eos, double S);

/// eps(S) = 2 S F'(S) - F(S), in closed form per family.
double energy_from_S(const Eos& eos, double S);

/// Full EOS point at kinetic scalar S (eps, p, cs2, and R for IteratedLog).
EosPoint eos_point_from_S(const Eos& eos, double S);

/// Squared sound speed dp/deps at a point on the curve:
/// Stiff -> 1; Linear -> kappa; LogEos -> ln(eps/eps0)+B+1; IteratedLog -> ln(R)/N.
double sound_speed_sq(const Eos& eos, const EosPoint& at);

/// True iff cs2 in [0,1].
bool physical_sound_speed(const Eos& eos, const EosPoint& at);

/// Parametric iterated-log EOS point at parameter R > 0:
///   eps = -eps0 R sum_{m=1}^{N} (-1)^m N!/(N-m)! (ln R)^{N-m}
///   p   =  eps0 R sum_{m=0}^{N} (-1)^m N!/(N-m)! (ln R)^{N-m}
/// Series are accumulated Horner-style in ln R.
EosPoint iterated_log_point(double eps0, int N, double R);

} // namespace relflow
