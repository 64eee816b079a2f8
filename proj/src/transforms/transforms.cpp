#include "itx/transforms.hpp"
#include "itx/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace itx::transforms {

using quad::Algebraic;
using quad::DecayClass;
using quad::Exponential;
using quad::Gaussian;
using quad::Oscillation;
using quad::OscillatoryKernel;
using quad::RealFn;
using quad::Singularity;

namespace {

void check_y(double y, const char* who) {
    if (!(y > 0.0) || !std::isfinite(y)) throw std::invalid_argument(std::string(who) + ": y must be positive and finite");
}

double pow_x(double x, double a) {
    if (a == 0.0) return 1.0;
    if (a == 1.0) return x;
    if (a == -1.0) return 1.0 / x;
    return std::pow(x, a);
}

Singularity shifted(Singularity s, double delta, bool add_log = false) {
    s.exponent += delta;
    s.logarithmic = s.logarithmic || add_log;
    return s;
}

DecayClass algebraic_shift(const DecayClass& d, double dp) {
    if (const auto* a = std::get_if<Algebraic>(&d)) return Algebraic{a->p + dp};
    return d;
}

// Decay of kernel * f for kernels that decay like exp(-rate x).
DecayClass with_exponential(const DecayClass& d, double rate) {
    if (!(rate > 0.0)) return d;  // y underflowed: the kernel no longer decays
    if (const auto* g = std::get_if<Gaussian>(&d)) return *g;
    if (const auto* e = std::get_if<Exponential>(&d)) return Exponential{e->rate + rate};
    return Exponential{rate};
}

DecayClass with_gaussian(const DecayClass& d, double rate) {
    if (!(rate > 0.0)) return d;
    if (const auto* g = std::get_if<Gaussian>(&d)) return Gaussian{g->rate + rate};
    return Gaussian{rate};
}

struct Folding {
    RealFn kernel;
    std::function<DecayClass(const DecayClass&)> decay;
    double sing_shift = 0.0;
    bool sing_log = false;
    double scale = 1.0;
};

// Non-oscillating kernel: an oscillating f keeps its oscillation.
Function1D fold_plain(const Function1D& f, const Folding& k) {
    const Singularity sing = shifted(f.at_zero, k.sing_shift, k.sing_log);
    const double scale = std::min(f.scale, k.scale);
    const double span = std::max(f.outer_scale(), k.scale);
    if (f.oscillation) {
        const Oscillation& osc = *f.oscillation;
        RealFn env = [kernel = k.kernel, inner = osc.envelope](double x) {
            const double kx = kernel(x);
            return kx == 0.0 ? 0.0 : kx * inner(x);
        };
        Function1D g =
            Function1D::oscillating(osc.kernel, osc.freq, std::move(env), k.decay(osc.envelope_decay), sing, scale);
        g.span = span;
        return g;
    }
    // Nested transforms are expensive: skip them where the kernel underflows.
    RealFn eval = [kernel = k.kernel, inner = f.eval](double x) {
        const double kx = kernel(x);
        return kx == 0.0 ? 0.0 : kx * inner(x);
    };
    Function1D g = Function1D::make(std::move(eval), k.decay(f.decay), sing, scale);
    g.span = span;
    return g;
}

Function1D fold_oscillating(const Function1D& f, OscillatoryKernel kernel, double y, RealFn weight,
                            double envelope_dp, double sing_shift) {
    if (f.oscillation) throw std::invalid_argument("transform: product of two oscillating factors is not supported");
    RealFn env = [weight = std::move(weight), inner = f.eval](double x) { return weight(x) * inner(x); };
    return Function1D::oscillating(kernel, y, std::move(env), algebraic_shift(f.decay, envelope_dp),
                                   shifted(f.at_zero, sing_shift), f.scale);
}

void reject_non_decaying(const Function1D& f, const char* who) {
    if (f.oscillation) return;
    if (const auto* a = std::get_if<Algebraic>(&f.decay); a && a->p <= 0.0)
        throw std::invalid_argument(std::string(who) + ": f must decay (algebraic p > 0)");
}

}  // namespace

std::string TransformKind::name() const {
    switch (kind) {
        case Kind::l2: return "l2";
        case Kind::laplace: return "laplace";
        case Kind::glasser: return "glasser";
        case Kind::fourier_sin: return "fourier_sin";
        case Kind::fourier_cos: return "fourier_cos";
        case Kind::hankel: return "hankel";
        case Kind::k: return "k";
        case Kind::e1: return "e1";
        case Kind::e21: return "e21";
        case Kind::widder: return "widder";
    }
    return "?";
}

std::vector<std::string> TransformKind::names() {
    return {"l2", "laplace", "glasser", "fourier_sin", "fourier_cos", "hankel", "k", "e1", "e21", "widder"};
}

TransformKind TransformKind::parse(const std::string& name, double order) {
    static const std::unordered_map<std::string, Kind> table = {
        {"l2", Kind::l2},         {"laplace", Kind::laplace},         {"glasser", Kind::glasser},
        {"fourier_sin", Kind::fourier_sin}, {"fourier_cos", Kind::fourier_cos}, {"hankel", Kind::hankel},
        {"k", Kind::k},           {"e1", Kind::e1},                   {"e21", Kind::e21},
        {"widder", Kind::widder},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown transform '" + name + "'");
    TransformKind t{it->second, order};
    if (!std::isfinite(order)) throw std::invalid_argument("transform order must be finite");
    if (t.kind == Kind::hankel && order < -1.0) throw std::invalid_argument("Hankel order must be >= -1");
    return t;
}

Function1D fold(const TransformKind& t, const Function1D& f, double y) {
    const std::string who = t.name();
    check_y(y, who.c_str());
    if (!f.eval) throw std::invalid_argument(who + ": empty function");
    const double nu = t.order;
    switch (t.kind) {
        case Kind::l2: {
            const double y2 = y * y;
            return fold_plain(f, {[y](double x) { const double xy = x * y; return x * std::exp(-xy * xy); },
                                  [y2](const DecayClass& d) { return with_gaussian(d, y2); }, -1.0, false,
                                  1.0 / y});
        }
        case Kind::laplace:
            return fold_plain(f, {[y](double x) { return std::exp(-x * y); },
                                  [y](const DecayClass& d) { return with_exponential(d, y); }, 0.0, false,
                                  1.0 / y});
        case Kind::k: {
            const double a = std::abs(nu);
            return fold_plain(
                f, {[y, nu](double x) {
                        const double xy = x * y;
                        if (xy > 700.0) return 0.0;
                        return std::sqrt(xy) * specfun::bessel_k_scaled(nu, xy).value * std::exp(-xy);
                    },
                    [y](const DecayClass& d) { return with_exponential(d, y); }, a - 0.5, a == 0.0,
                    1.0 / y});
        }
        case Kind::glasser:
            reject_non_decaying(f, "glasser");
            return fold_plain(f, {[y](double x) { return 1.0 / std::hypot(x, y); },
                                  [](const DecayClass& d) { return algebraic_shift(d, 1.0); }, 0.0, false, y});
        case Kind::widder:
            reject_non_decaying(f, "widder");
            return fold_plain(f, {[y](double x) { return x / (x * x + y * y); },
                                  [](const DecayClass& d) { return algebraic_shift(d, 1.0); }, -1.0, false,
                                  y});
        case Kind::e1:
            reject_non_decaying(f, "e1");
            return fold_plain(f, {[y](double x) { return specfun::expint_e1_scaled(x * y).value; },
                                  [](const DecayClass& d) { return algebraic_shift(d, 1.0); }, 0.0, true,
                                  1.0 / y});
        case Kind::e21:
            reject_non_decaying(f, "e21");
            return fold_plain(f, {[y](double x) {
                                      const double xy = x * y;
                                      return x * specfun::expint_e1_scaled(xy * xy).value;
                                  },
                                  [](const DecayClass& d) { return algebraic_shift(d, 1.0); }, -1.0, true,
                                  1.0 / y});
        case Kind::fourier_sin:
            return fold_oscillating(f, OscillatoryKernel::sine(), y, [](double) { return 1.0; }, 0.0, -1.0);
        case Kind::fourier_cos:
            return fold_oscillating(f, OscillatoryKernel::cosine(), y, [](double) { return 1.0; }, 0.0, 0.0);
        case Kind::hankel:
            if (!(nu >= -1.0)) throw std::invalid_argument("hankel: order must be >= -1");
            return fold_oscillating(f, OscillatoryKernel::bessel(nu), y,
                                    [y](double x) { return std::sqrt(x * y); }, -0.5, -0.5 - nu);
    }
    throw std::logic_error("unhandled transform kind");
}

Tolerance default_tolerance(const Function1D& folded) {
    return folded.oscillation ? Tolerance::oscillatory_default() : Tolerance::defaults();
}

IntegrationResult apply(const TransformKind& kind, const Function1D& f, double y) {
    const Function1D g = fold(kind, f, y);
    return quad::integrate_semi_infinite(g, default_tolerance(g));
}

IntegrationResult apply(const TransformKind& kind, const Function1D& f, double y, const Tolerance& tol) {
    return quad::integrate_semi_infinite(fold(kind, f, y), tol);
}

IntegrationResult l2(const Function1D& f, double y, const Tolerance& tol) { return apply({Kind::l2}, f, y, tol); }
IntegrationResult laplace(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::laplace}, f, y, tol);
}
IntegrationResult glasser(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::glasser}, f, y, tol);
}
IntegrationResult fourier_sin(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::fourier_sin}, f, y, tol);
}
IntegrationResult fourier_cos(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::fourier_cos}, f, y, tol);
}
IntegrationResult hankel(double nu, const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::hankel, nu}, f, y, tol);
}
IntegrationResult k_transform(double nu, const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::k, nu}, f, y, tol);
}
IntegrationResult e1_transform(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::e1}, f, y, tol);
}
IntegrationResult e21_transform(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::e21}, f, y, tol);
}
IntegrationResult widder(const Function1D& f, double y, const Tolerance& tol) {
    return apply({Kind::widder}, f, y, tol);
}

IntegrationResult l2_via_laplace(const Function1D& f, double y, const Tolerance& tol) {
    check_y(y, "l2_via_laplace");
    IntegrationResult r = laplace(compose_power(f, 0.5), y * y, tol);
    r.value *= 0.5;
    r.abs_err *= 0.5;
    return r;
}

IntegrationResult laplace_via_l2(const Function1D& f, double y, const Tolerance& tol) {
    check_y(y, "laplace_via_l2");
    IntegrationResult r = l2(compose_power(f, 2.0), std::sqrt(y), tol);
    r.value *= 2.0;
    r.abs_err *= 2.0;
    return r;
}

Function1D times_power(const Function1D& f, double a) {
    const Singularity sing = shifted(f.at_zero, -a);
    if (f.oscillation) {
        const Oscillation& osc = *f.oscillation;
        RealFn env = [a, inner = osc.envelope](double x) { return pow_x(x, a) * inner(x); };
        Function1D g = Function1D::oscillating(osc.kernel, osc.freq, std::move(env),
                                               algebraic_shift(osc.envelope_decay, -a), sing, f.scale);
        g.span = f.span;
        return g;
    }
    RealFn eval = [a, inner = f.eval](double x) { return pow_x(x, a) * inner(x); };
    Function1D g = Function1D::make(std::move(eval), algebraic_shift(f.decay, -a), sing, f.scale);
    g.span = f.span;
    return g;
}

Function1D scaled(const Function1D& f, double c) {
    Function1D g = f;
    g.eval = [c, inner = f.eval](double x) { return c * inner(x); };
    if (g.oscillation) g.oscillation->envelope = [c, inner = f.oscillation->envelope](double x) { return c * inner(x); };
    return g;
}

Function1D compose_power(const Function1D& f, double k) {
    if (k != 0.5 && k != 2.0) throw std::invalid_argument("compose_power: k must be 1/2 or 2");
    RealFn eval = [k, inner = f.eval](double x) { return inner(k == 2.0 ? x * x : std::sqrt(x)); };
    // The oscillation is no longer periodic in x; the transform kernel is
    // expected to provide the decay.
    const DecayClass base = f.oscillation ? f.oscillation->envelope_decay : f.decay;
    DecayClass decay = base;
    if (const auto* a = std::get_if<Algebraic>(&base)) decay = Algebraic{a->p * k};
    else if (const auto* g = std::get_if<Gaussian>(&base)) decay = k == 2.0 ? DecayClass{*g} : DecayClass{Exponential{g->rate}};
    else if (const auto* e = std::get_if<Exponential>(&base)) decay = k == 2.0 ? DecayClass{Gaussian{e->rate}} : DecayClass{*e};
    Singularity sing = f.at_zero;
    sing.exponent *= k;
    Function1D g = Function1D::make(std::move(eval), decay, sing, std::pow(f.scale, k));
    if (f.span > 0.0) g.span = std::pow(f.span, k);
    return g;
}

InnerTransform::InnerTransform(Evaluator eval) : state_(std::make_shared<State>()) { state_->eval = std::move(eval); }

double InnerTransform::operator()(double u) const {
    if (const auto it = state_->memo.find(u); it != state_->memo.end()) return it->second;
    const IntegrationResult r = state_->eval(u);
    state_->memo.emplace(u, r.value);
    state_->converged = state_->converged && r.converged;
    state_->max_abs_err = std::max(state_->max_abs_err, r.abs_err);
    state_->evals += r.n_evals;
    return r.value;
}

}  // namespace itx::transforms
