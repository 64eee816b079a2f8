#pragma once

// Real-argument special functions used by the transform library.
//
// Every function returns a SpecialValue carrying a machine-epsilon-scaled
// error estimate alongside the value. Inputs outside the real domain of a
// function raise itx::specfun::DomainError.

#include <stdexcept>
#include <string>

namespace itx::specfun {

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct SpecialValue {
    double value = 0.0;
    double abs_err_bound = 0.0;

    operator double() const { return value; }  // NOLINT(google-explicit-constructor)
};

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Gamma family.
SpecialValue gamma(double x);
SpecialValue log_gamma(double x);  // log|Gamma(x)|
SpecialValue beta(double x, double y);

/// 1/Gamma(1+mu) and the Temme auxiliaries
///   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu),
///   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
/// for |mu| <= 1/2, evaluated without cancellation from the Taylor
/// series of 1/Gamma.
struct TemmeGammas {
    double gam1;
    double gam2;
    double gampl;  // 1/Gamma(1+mu)
    double gammi;  // 1/Gamma(1-mu)
};
TemmeGammas temme_gammas(double mu);

// Bessel functions of real order.
//
// J_nu supports nu >= -1 (negative orders via the Y reflection), I_nu and
// K_nu any real order. The *_scaled variants return exp(-x) I_nu(x) and
// exp(x) K_nu(x), which stay finite for large x.
SpecialValue bessel_j(double nu, double x);
SpecialValue bessel_y(double nu, double x);
SpecialValue bessel_i(double nu, double x);
SpecialValue bessel_k(double nu, double x);
SpecialValue bessel_i_scaled(double nu, double x);
SpecialValue bessel_k_scaled(double nu, double x);

/// Modified Struve function L_0.
SpecialValue struve_l0(double x);

/// I_0(x) - L_0(x), computed without the cancellation of the direct
/// difference for large x.
SpecialValue i0_minus_l0(double x);

// Error function family.
SpecialValue erf(double x);
SpecialValue erfc(double x);
/// Dawson integral exp(-x^2) * int_0^x exp(t^2) dt.
SpecialValue dawson(double x);

// Exponential integrals.
SpecialValue expint_e1(double x);
/// exp(x) E1(x); finite and ~1/x for large x.
SpecialValue expint_e1_scaled(double x);
/// Ei(x) for x != 0. For x < 0 this is -E1(-x).
SpecialValue expint_ei(double x);
/// Schlomilch E_n(x) = int_1^inf exp(-x t) t^-n dt, n >= 0, x > 0.
SpecialValue schlomilch_en(int n, double x);

}  // namespace itx::specfun
