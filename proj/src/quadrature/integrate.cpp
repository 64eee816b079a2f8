#include "itx/quadrature.hpp"
#include "itx/specfun.hpp"
#include "checked.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace itx::quad {

std::string describe(const DecayClass& d) {
    std::ostringstream os;
    os.precision(6);
    std::visit(
        [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Gaussian>) os << "gaussian(rate=" << v.rate << ")";
            else if constexpr (std::is_same_v<T, Exponential>) os << "exponential(rate=" << v.rate << ")";
            else if constexpr (std::is_same_v<T, Algebraic>) os << "algebraic(p=" << v.p << ")";
            else os << "oscillatory(period=" << v.period_hint << ")";
        },
        d);
    return os.str();
}

double OscillatoryKernel::operator()(double t) const {
    switch (kind) {
        case KernelKind::sin: return std::sin(t);
        case KernelKind::cos: return std::cos(t);
        case KernelKind::bessel_j: return specfun::bessel_j(order, t).value;
    }
    return 0.0;
}

std::string OscillatoryKernel::name() const {
    switch (kind) {
        case KernelKind::sin: return "sin";
        case KernelKind::cos: return "cos";
        case KernelKind::bessel_j: {
            std::ostringstream os;
            os << "J_" << order;
            return os.str();
        }
    }
    return "?";
}

Function1D Function1D::make(RealFn fn, DecayClass decay, Singularity at_zero, double scale) {
    Function1D f;
    f.eval = std::move(fn);
    f.decay = decay;
    f.at_zero = at_zero;
    f.scale = scale;
    return f;
}

Function1D Function1D::oscillating(OscillatoryKernel kernel, double freq, RealFn envelope, DecayClass envelope_decay,
                                   Singularity at_zero, double scale) {
    Function1D f;
    f.eval = [kernel, freq, envelope](double x) { return envelope(x) * kernel(freq * x); };
    double period = 2.0 * std::numbers::pi / freq;
    f.decay = Oscillatory{period};
    f.at_zero = at_zero;
    f.scale = scale;
    f.oscillation = Oscillation{kernel, freq, std::move(envelope), envelope_decay};
    return f;
}

Tolerance Tolerance::tightened(double factor) const {
    Tolerance t = *this;
    t.rel = std::max(rel / factor, 1e-14);
    t.abs = std::max(abs / factor, 1e-300);
    return t;
}

void Tolerance::validate() const {
    if (!(rel >= 1e-14) || !std::isfinite(rel)) throw std::invalid_argument("tolerance: rel must be >= 1e-14");
    if (!(abs > 0.0) || !std::isfinite(abs)) throw std::invalid_argument("tolerance: abs must be positive");
    if (max_evals <= 0) throw std::invalid_argument("tolerance: max_evals must be positive");
}

double Tolerance::target(double value) const { return std::max(abs, rel * std::abs(value)); }

namespace {

// g(x, b - x) with the complement carried to full precision.
using ComplementFn = std::function<double(double, double)>;

IntegrationResult tanh_sinh_interval(const ComplementFn& f, double a, double b, const Tolerance& tol,
                                     bool exact_complement) {
    const double w = b - a;
    return tanh_sinh_unit(
        [&](double u, double c) {
            const double x = u <= 0.5 ? a + w * u : b - w * c;
            // Nodes that round onto an endpoint carry no representable
            // information, unless the complement is passed through.
            if (x <= a || (x >= b && !exact_complement)) return 0.0;
            return w * f(x, w * c);
        },
        tol);
}

// tanh-sinh with bisection when a single rule cannot reach the target.
IntegrationResult tanh_sinh_adaptive(const ComplementFn& f, double a, double b, const Tolerance& tol, int depth,
                                     bool exact_complement) {
    IntegrationResult r = tanh_sinh_interval(f, a, b, tol, exact_complement);
    if (r.converged || depth == 0) return r;
    const long left_budget = tol.max_evals - r.n_evals;
    if (left_budget < 200) return r;
    const double mid = 0.5 * (a + b);
    Tolerance half = tol;
    half.abs = 0.5 * tol.abs;
    half.max_evals = left_budget / 2;
    // On [a, mid] the rule supplies mid - x; the caller wants b - x.
    const ComplementFn shifted = [&f, b, mid](double x, double xc) { return f(x, xc + (b - mid)); };
    const IntegrationResult lo = tanh_sinh_adaptive(shifted, a, mid, half, depth - 1, true);
    const IntegrationResult hi = tanh_sinh_adaptive(f, mid, b, half, depth - 1, exact_complement);
    IntegrationResult out;
    out.value = lo.value + hi.value;
    out.abs_err = lo.abs_err + hi.abs_err;
    out.n_evals = r.n_evals + lo.n_evals + hi.n_evals;
    out.converged = out.abs_err <= tol.target(out.value);
    if (!out.converged && r.abs_err < out.abs_err) {
        r.n_evals = out.n_evals;
        return r;
    }
    return out;
}

}  // namespace

namespace {

void check_interval(double a, double b, const Tolerance& tol, Singularity left, Singularity right) {
    tol.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("integrate_finite: bounds must be finite");
    if (a > b) throw std::invalid_argument("integrate_finite: requires a < b");
    if (!left.integrable() || !right.integrable())
        throw std::invalid_argument("integrate_finite: endpoint singularity is not integrable");
}

}  // namespace

IntegrationResult integrate_finite_complement(const std::function<double(double, double)>& f, double a, double b,
                                              const Tolerance& tol) {
    check_interval(a, b, tol, {}, {});
    if (a == b) return {0.0, 0.0, 0, true};
    return tanh_sinh_adaptive(f, a, b, tol, 4, true);
}

IntegrationResult integrate_finite(const RealFn& f, double a, double b, const Tolerance& tol, Singularity left,
                                   Singularity right) {
    check_interval(a, b, tol, left, right);
    if (a == b) return {0.0, 0.0, 0, true};
    const ComplementFn g = [&f](double x, double) { return f(x); };
    if (!left.is_none() || !right.is_none()) return tanh_sinh_adaptive(g, a, b, tol, 4, false);
    IntegrationResult r = gauss_kronrod(f, a, b, tol);
    if (!r.converged && r.n_evals < tol.max_evals) {
        // Undeclared endpoint trouble: the DE rule is far less sensitive to it.
        Tolerance rest = tol;
        rest.max_evals = tol.max_evals - r.n_evals;
        IntegrationResult alt = tanh_sinh_adaptive(g, a, b, rest, 2, false);
        alt.n_evals += r.n_evals;
        if (alt.converged || alt.abs_err < r.abs_err) return alt;
        r.n_evals = alt.n_evals;
    }
    return r;
}

namespace {

constexpr double kScaleSplit = 1e4;

double decay_length(const DecayClass& d) {
    if (const auto* g = std::get_if<Gaussian>(&d); g && g->rate > 0.0 && std::isfinite(g->rate))
        return 1.0 / std::sqrt(g->rate);
    if (const auto* e = std::get_if<Exponential>(&d); e && e->rate > 0.0 && std::isfinite(e->rate))
        return 1.0 / e->rate;
    return std::numeric_limits<double>::quiet_NaN();  // min/max below ignore it
}

IntegrationResult split_scales(const Function1D& f, double lo, double hi, const Tolerance& tol) {
    Tolerance part = tol;
    part.abs = tol.abs / 3.0;
    const RealFn& g = f.eval;

    const IntegrationResult head = integrate_finite(g, 0.0, lo, part, f.at_zero, {});
    const RealFn logx = [&g](double t) {
        const double x = std::exp(t);
        return g(x) * x;
    };
    const IntegrationResult mid = integrate_finite(logx, std::log(lo), std::log(hi), part);
    Function1D tail = f;
    tail.eval = [&g, hi](double x) { return g(hi + x); };
    tail.at_zero = {};
    tail.scale = hi;
    tail.span = 0.0;
    const IntegrationResult rest = integrate_semi_infinite(tail, part);

    IntegrationResult out;
    out.value = head.value + mid.value + rest.value;
    out.abs_err = head.abs_err + mid.abs_err + rest.abs_err;
    out.n_evals = head.n_evals + mid.n_evals + rest.n_evals;
    out.converged = out.abs_err <= tol.target(out.value);
    return out;
}

}  // namespace

IntegrationResult integrate_semi_infinite(const Function1D& f, const Tolerance& tol) {
    tol.validate();
    if (!f.eval) throw std::invalid_argument("integrate_semi_infinite: empty integrand");
    if (!f.at_zero.integrable())
        throw std::invalid_argument("integrate_semi_infinite: singularity at zero is not integrable");
    if (!(f.scale > 0.0) || !std::isfinite(f.scale))
        throw std::invalid_argument("integrate_semi_infinite: scale must be positive");

    if (f.oscillation) {
        const Oscillation& osc = *f.oscillation;
        const Function1D env = Function1D::make(osc.envelope, osc.envelope_decay, f.at_zero, f.scale);
        return integrate_oscillatory(env, osc.kernel, osc.freq, tol);
    }

    // Widely separated length scales: a single DE map cannot resolve both,
    // so integrate [0, lo], [lo, hi] in log x and [hi, inf) separately.
    // Past a Gaussian / exponential decay length nothing else matters.
    const double len = decay_length(f.decay);
    const double lo = std::min(f.scale, len);
    const double hi = std::isnan(len) ? f.outer_scale() : len;
    if (std::isfinite(hi) && hi > kScaleSplit * lo) return split_scales(f, lo, hi, tol);

    const RealFn& g = f.eval;
    return std::visit(
        [&](const auto& d) -> IntegrationResult {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                if (!(d.rate > 0.0)) throw std::invalid_argument("gaussian decay requires rate > 0");
                // An overflowed rate (y^2 = inf) leaves f.scale as the only length.
                return exp_sinh(g, std::isfinite(d.rate) ? std::min(f.scale, 1.0 / std::sqrt(d.rate)) : f.scale, tol);
            } else if constexpr (std::is_same_v<T, Exponential>) {
                if (!(d.rate > 0.0)) throw std::invalid_argument("exponential decay requires rate > 0");
                return exp_sinh(g, std::isfinite(d.rate) ? std::min(f.scale, 1.0 / d.rate) : f.scale, tol);
            } else if constexpr (std::is_same_v<T, Algebraic>) {
                if (!(d.p > 1.0))
                    throw std::invalid_argument("algebraic decay x^-p requires p > 1 for absolute convergence");
                const double s = f.scale;
                return tanh_sinh_unit(
                    [&](double u, double c) {
                        const double x = s * u / c;
                        if (!(x < 1e150)) return 0.0;
                        return g(x) * (s / c) / c;
                    },
                    tol);
            } else {
                if (!(d.period_hint > 0.0)) throw std::invalid_argument("oscillatory decay requires period > 0");
                const double half = 0.5 * d.period_hint;
                int k = 0;
                return detail::partitioned(g, [&k, half] { return ++k * half; }, false, tol);
            }
        },
        f.decay);
}

}  // namespace itx::quad
