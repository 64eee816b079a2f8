#pragma once

// Adaptive numerical integration on finite intervals and on (0, inf).
//
// Integrands carry decay metadata (Function1D) that selects the strategy:
//   gaussian / exponential  -> exp-sinh double-exponential mapping
//   algebraic(p)            -> x = s t / (1 - t), then tanh-sinh on (0, 1)
//   oscillatory             -> partition at kernel zeros + Wynn epsilon
// Convergence uses "either target" semantics: a result is converged when
// abs_err <= max(tol.abs, tol.rel * |value|).

#include <algorithm>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace itx::quad {

using RealFn = std::function<double(double)>;

struct Gaussian {
    double rate = 1.0;  // ~ exp(-rate x^2)
};
struct Exponential {
    double rate = 1.0;  // ~ exp(-rate x)
};
struct Algebraic {
    double p = 2.0;  // ~ x^-p
};
struct Oscillatory {
    double period_hint = 2.0 * std::numbers::pi;
};

using DecayClass = std::variant<Gaussian, Exponential, Algebraic, Oscillatory>;

std::string describe(const DecayClass& d);

/// Behaviour at the origin: bounded, x^-exponent, or logarithmic.
struct Singularity {
    double exponent = 0.0;
    bool logarithmic = false;

    static Singularity none() { return {}; }
    static Singularity power(double s) { return {s, false}; }
    static Singularity log() { return {0.0, true}; }

    bool is_none() const { return exponent <= 0.0 && !logarithmic; }
    bool integrable() const { return exponent < 1.0; }
};

enum class KernelKind { sin, cos, bessel_j };

/// An oscillating factor k(t): sin t, cos t or J_order(t).
struct OscillatoryKernel {
    KernelKind kind = KernelKind::sin;
    double order = 0.0;

    double operator()(double t) const;
    std::string name() const;

    static OscillatoryKernel sine() { return {KernelKind::sin, 0.0}; }
    static OscillatoryKernel cosine() { return {KernelKind::cos, 0.0}; }
    static OscillatoryKernel bessel(double nu) { return {KernelKind::bessel_j, nu}; }
};

/// eval(x) == envelope(x) * kernel(freq * x).
struct Oscillation {
    OscillatoryKernel kernel;
    double freq = 1.0;
    RealFn envelope;
    DecayClass envelope_decay = Algebraic{0.0};
};

/// A real integrand on (0, inf) with the metadata that picks its quadrature.
struct Function1D {
    RealFn eval;
    DecayClass decay = Algebraic{2.0};
    Singularity at_zero;
    double scale = 1.0;  // characteristic length of the integrand
    double span = 0.0;   // largest length scale when several are in play; 0 = scale
    std::optional<Oscillation> oscillation;

    double operator()(double x) const { return eval(x); }
    double outer_scale() const { return std::max(scale, span); }

    static Function1D make(RealFn fn, DecayClass decay, Singularity at_zero = {}, double scale = 1.0);
    static Function1D oscillating(OscillatoryKernel kernel, double freq, RealFn envelope,
                                  DecayClass envelope_decay, Singularity at_zero = {},
                                  double scale = 1.0);
};

struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-12;
    long max_evals = 200000;

    static Tolerance defaults() { return {}; }
    static Tolerance oscillatory_default() { return {1e-8, 1e-12, 200000}; }

    /// Tightens rel/abs by `factor`, clamped to the double-precision floor.
    Tolerance tightened(double factor) const;
    void validate() const;
    double target(double value) const;
};

struct IntegrationResult {
    double value = 0.0;
    double abs_err = 0.0;
    long n_evals = 0;
    bool converged = false;
};

/// Raised when an integrand returns NaN or infinity.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

IntegrationResult integrate_finite(const RealFn& f, double a, double b, const Tolerance& tol = {},
                                   Singularity left = {}, Singularity right = {});

/// As integrate_finite, for integrands singular at b: f(x, b - x) receives the
/// distance to b at full precision (b - x itself would round to zero).
IntegrationResult integrate_finite_complement(const std::function<double(double, double)>& f, double a, double b,
                                              const Tolerance& tol = {});

IntegrationResult integrate_semi_infinite(const Function1D& f, const Tolerance& tol = {});

/// int_0^inf envelope(x) kernel(freq x) dx.
IntegrationResult integrate_oscillatory(const Function1D& envelope, OscillatoryKernel kernel,
                                        double freq,
                                        const Tolerance& tol = Tolerance::oscillatory_default());

// Lower-level rules, exposed for tests.

/// Adaptive Gauss-Kronrod 7/15 on [a, b].
IntegrationResult gauss_kronrod(const RealFn& f, double a, double b, const Tolerance& tol);

/// tanh-sinh on (0, 1). `g(u, c)` receives u and its complement c = 1 - u,
/// both to full relative precision.
IntegrationResult tanh_sinh_unit(const std::function<double(double, double)>& g, const Tolerance& tol);

/// exp-sinh on (0, inf) with nodes x = scale * exp(pi/2 sinh t).
IntegrationResult exp_sinh(const RealFn& f, double scale, const Tolerance& tol);

/// k-th positive zero (k >= 1) of J_nu, nu >= -1.
double bessel_j_zero(double nu, int k);

/// Successive positive zeros of kernel(freq x).
class KernelZeros {
public:
    KernelZeros(OscillatoryKernel kernel, double freq);
    double next();

private:
    OscillatoryKernel kernel_;
    double freq_;
    int k_ = 0;
    double last_ = 0.0;
};

}  // namespace itx::quad
