#include "itx/quadrature.hpp"
#include "itx/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace itx::quad {
namespace {

constexpr double kPi = std::numbers::pi;

double mcmahon(double nu, int k) {
    const double mu = 4.0 * nu * nu;
    const double beta = (k + 0.5 * nu - 0.25) * kPi;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

double j(double nu, double x) { return specfun::bessel_j(nu, x).value; }

// Bisection on a sign change, used when Newton wanders.
double bisect(double nu, double lo, double hi) {
    double flo = j(nu, lo);
    for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = j(nu, mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double bessel_j_zero(double nu, int k) {
    if (k < 1) throw std::invalid_argument("bessel_j_zero: k must be >= 1");
    if (!(nu >= -1.0) || !std::isfinite(nu)) throw std::invalid_argument("bessel_j_zero: nu must be >= -1");
    if (nu == -1.0) return bessel_j_zero(1.0, k);  // J_{-1} = -J_1

    const double guess = mcmahon(nu, k);
    double x = guess;
    bool ok = false;
    for (int it = 0; it < 40; ++it) {
        const double f = j(nu, x);
        const double df = (nu / x) * f - j(nu + 1.0, x);
        if (df == 0.0) break;
        const double step = f / df;
        x -= step;
        if (!(x > 0.0) || std::abs(x - guess) > 1.0) break;
        if (std::abs(step) <= 1e-15 * x) {
            ok = true;
            break;
        }
    }
    if (ok) return x;

    // Fallback: bracket around the asymptotic estimate.
    double lo = std::max(1e-8, guess - 0.5 * kPi);
    double hi = guess + 0.5 * kPi;
    const double step = 0.05;
    double a = lo;
    double fa = j(nu, a);
    for (double b = a + step; b <= hi; b += step) {
        const double fb = j(nu, b);
        if ((fa < 0) != (fb < 0)) return bisect(nu, a, b);
        a = b;
        fa = fb;
    }
    throw std::runtime_error("bessel_j_zero: failed to locate zero");
}

KernelZeros::KernelZeros(OscillatoryKernel kernel, double freq) : kernel_(kernel), freq_(freq) {
    if (!(freq > 0.0) || !std::isfinite(freq)) throw std::invalid_argument("KernelZeros: freq must be positive");
}

double KernelZeros::next() {
    ++k_;
    double t = 0.0;
    switch (kernel_.kind) {
        case KernelKind::sin: t = k_ * kPi; break;
        case KernelKind::cos: t = (k_ - 0.5) * kPi; break;
        case KernelKind::bessel_j:
            // Far out McMahon is already accurate to rounding.
            t = k_ > 400 ? mcmahon(kernel_.order == -1.0 ? 1.0 : kernel_.order, k_)
                         : bessel_j_zero(kernel_.order, k_);
            break;
    }
    last_ = t / freq_;
    return last_;
}

}  // namespace itx::quad
