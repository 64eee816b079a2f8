#pragma once

// Integral transforms over Function1D.
//
// Every operator folds its kernel into the integrand, producing a new
// Function1D whose decay / singularity metadata selects the quadrature:
//
//   kind        kernel k(x, y)             folded decay (f algebraic p)
//   L2          x exp(-x^2 y^2)            gaussian(y^2)
//   Laplace     exp(-x y)                  exponential(y)
//   Glasser     1 / sqrt(x^2 + y^2)        algebraic(p + 1), p <= 0 rejected
//   FourierSin  sin(x y)                   oscillatory, envelope f
//   FourierCos  cos(x y)                   oscillatory, envelope f
//   Hankel(nu)  sqrt(x y) J_nu(x y)        oscillatory, envelope sqrt(x y) f
//   K(nu)       sqrt(x y) K_nu(x y)        exponential(y)
//   E1          exp(x y) E1(x y)           algebraic(p + 1), log at 0
//   E21         x exp(x^2 y^2) E1(x^2 y^2) algebraic(p + 1)
//   Widder      x / (x^2 + y^2)            algebraic(p + 1)
//
// Gaussian / exponential f keep their own decay where it dominates. An
// oscillating f under a non-oscillating kernel keeps its oscillation and
// the kernel joins the envelope.

#include "itx/quadrature.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace itx::transforms {

using quad::Function1D;
using quad::IntegrationResult;
using quad::Tolerance;

enum class Kind { l2, laplace, glasser, fourier_sin, fourier_cos, hankel, k, e1, e21, widder };

struct TransformKind {
    Kind kind = Kind::l2;
    double order = 0.0;  // nu for Hankel and K

    std::string name() const;
    bool has_order() const { return kind == Kind::hankel || kind == Kind::k; }

    /// Parses "l2", "laplace", "glasser", "fourier_sin", "fourier_cos",
    /// "hankel", "k", "e1", "e21", "widder". Throws std::invalid_argument.
    static TransformKind parse(const std::string& name, double order = 0.0);
    static std::vector<std::string> names();
};

/// kernel(x, y) * f(x) as a Function1D with recomputed metadata.
Function1D fold(const TransformKind& kind, const Function1D& f, double y);

/// Tolerance used when the caller does not supply one: the oscillatory
/// default when the folded integrand oscillates, the plain default otherwise.
Tolerance default_tolerance(const Function1D& folded);

IntegrationResult apply(const TransformKind& kind, const Function1D& f, double y);
IntegrationResult apply(const TransformKind& kind, const Function1D& f, double y, const Tolerance& tol);

IntegrationResult l2(const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult laplace(const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult glasser(const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult fourier_sin(const Function1D& f, double y, const Tolerance& tol = Tolerance::oscillatory_default());
IntegrationResult fourier_cos(const Function1D& f, double y, const Tolerance& tol = Tolerance::oscillatory_default());
IntegrationResult hankel(double nu, const Function1D& f, double y, const Tolerance& tol = Tolerance::oscillatory_default());
IntegrationResult k_transform(double nu, const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult e1_transform(const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult e21_transform(const Function1D& f, double y, const Tolerance& tol = {});
IntegrationResult widder(const Function1D& f, double y, const Tolerance& tol = {});

/// (1/2) Laplace{f(sqrt x); y^2}
IntegrationResult l2_via_laplace(const Function1D& f, double y, const Tolerance& tol = {});
/// 2 L2{f(x^2); sqrt y}
IntegrationResult laplace_via_l2(const Function1D& f, double y, const Tolerance& tol = {});

// Function1D combinators with metadata bookkeeping.

/// x^a f(x)
Function1D times_power(const Function1D& f, double a);
/// c f(x)
Function1D scaled(const Function1D& f, double c);
/// f(x^k), k in {1/2, 2}
Function1D compose_power(const Function1D& f, double k);

/// u -> inner transform evaluated at u, memoized per node. Keeps the worst
/// inner error and whether every inner evaluation converged. Copies share
/// state, so use one instance per evaluation thread.
class InnerTransform {
public:
    using Evaluator = std::function<IntegrationResult(double)>;

    explicit InnerTransform(Evaluator eval);

    double operator()(double u) const;
    bool all_converged() const { return state_->converged; }
    double max_abs_err() const { return state_->max_abs_err; }
    long evals() const { return state_->evals; }

private:
    struct State {
        Evaluator eval;
        bool converged = true;
        double max_abs_err = 0.0;
        long evals = 0;
        std::unordered_map<double, double> memo;
    };
    std::shared_ptr<State> state_;
};

}  // namespace itx::transforms
