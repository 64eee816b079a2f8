#include "itx/acceleration.hpp"
#include "itx/quadrature.hpp"
#include "checked.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itx::quad {
namespace {

constexpr int kMinPanels = 8;
constexpr int kMaxPanels = 1000;

// tanh-sinh on [a, b]; used for the first panel, where the envelope may be
// singular at the origin.
IntegrationResult tanh_sinh_interval(const RealFn& f, double a, double b, const Tolerance& tol) {
    const double w = b - a;
    return tanh_sinh_unit([&](double u, double c) { return w * (u <= 0.5 ? f(a + w * u) : f(b - w * c)); },
                          tol);
}

double decay_length(const DecayClass& d, double scale) {
    if (const auto* g = std::get_if<Gaussian>(&d)) return std::min(scale, 1.0 / std::sqrt(g->rate));
    if (const auto* e = std::get_if<Exponential>(&d)) return std::min(scale, 1.0 / e->rate);
    return scale;
}

bool is_fast(const DecayClass& d) {
    return std::holds_alternative<Gaussian>(d) || std::holds_alternative<Exponential>(d);
}

}  // namespace

namespace detail {

IntegrationResult partitioned(const RealFn& g, const std::function<double()>& next_break, bool fast_envelope,
                              const Tolerance& tol) {
    Tolerance panel_tol = tol.tightened(10.0);
    IntegrationResult res;

    double a = next_break();
    IntegrationResult first = tanh_sinh_interval(g, 0.0, a, panel_tol);
    double sum = first.value;
    double quad_err = first.abs_err;
    long evals = first.n_evals;

    WynnEpsilon wynn;
    WynnEpsilon::Estimate est = wynn.push(sum);
    panel_tol.abs = std::max(panel_tol.abs, 1e-3 * tol.target(sum));

    int quiet = 0;
    bool done = false;
    for (int k = 1; k <= kMaxPanels && !done; ++k) {
        const double b = next_break();
        Tolerance t = panel_tol;
        t.max_evals = std::max(1000L, tol.max_evals - evals);
        const IntegrationResult r = gauss_kronrod(g, a, b, t);
        a = b;
        sum += r.value;
        quad_err += r.abs_err;
        evals += r.n_evals;
        est = wynn.push(sum);

        if (fast_envelope) {
            quiet = std::abs(r.value) <= 1e-4 * tol.target(sum) ? quiet + 1 : 0;
            if (quiet >= 3) {
                res.value = sum;
                res.abs_err = quad_err + 3.0 * std::abs(r.value);
                done = true;
                break;
            }
        }
        if (k >= kMinPanels && est.error + quad_err <= tol.target(est.value)) {
            res.value = est.value;
            res.abs_err = est.error + quad_err;
            done = true;
        }
        if (evals >= tol.max_evals) break;
    }
    if (!done) {
        res.value = est.value;
        res.abs_err = est.error + quad_err;
    }
    res.n_evals = evals;
    res.converged = done && res.abs_err <= tol.target(res.value);
    return res;
}

}  // namespace detail

IntegrationResult integrate_oscillatory(const Function1D& envelope, OscillatoryKernel kernel, double freq,
                                        const Tolerance& tol) {
    tol.validate();
    if (!(freq > 0.0) || !std::isfinite(freq)) throw std::invalid_argument("integrate_oscillatory: freq must be positive");
    if (kernel.kind == KernelKind::bessel_j && !(kernel.order >= -1.0))
        throw std::invalid_argument("integrate_oscillatory: Bessel order must be >= -1");

    const RealFn g = [&](double x) { return envelope(x) * kernel(freq * x); };
    const bool fast = is_fast(envelope.decay);
    const double length = decay_length(envelope.decay, envelope.scale);

    // Envelope dies out within a couple of oscillations: no need to partition.
    if (fast && freq * length <= 2.0) return exp_sinh(g, length, tol);

    KernelZeros zeros(kernel, freq);
    return detail::partitioned(g, [&zeros] { return zeros.next(); }, fast, tol);
}

}  // namespace itx::quad
