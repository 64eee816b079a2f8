#include "itx/specfun.hpp"

#include <cmath>
#include <limits>

namespace itx::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

// exp(x) E_n(x) for x > 1, n >= 1, by the Lentz continued fraction.
double en_scaled_cf(int n, double x) {
    const int nm1 = n - 1;
    double b = x + n;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double a = -static_cast<double>(i) * (nm1 + i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

// E_n(x) for 0 < x <= 1, n >= 1, by the power series.
double en_series(int n, double x) {
    const int nm1 = n - 1;
    double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - kEulerGamma;
    double fact = 1.0;
    for (int i = 1; i < kMaxIter; ++i) {
        fact *= -x / i;
        double del = 0.0;
        if (i != nm1) {
            del = -fact / (i - nm1);
        } else {
            double psi = -kEulerGamma;
            for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
            del = fact * (-std::log(x) + psi);
        }
        ans += del;
        if (std::abs(del) < std::abs(ans) * kEps) break;
    }
    return ans;
}

// Ei(x), x > 0.
double ei_positive(double x) {
    if (x < 40.0) {
        double term = 1.0;
        double sum = 0.0;
        for (int k = 1; k < kMaxIter; ++k) {
            term *= x / k;
            const double del = term / k;
            sum += del;
            if (del < kEps * sum) break;
        }
        return kEulerGamma + std::log(x) + sum;
    }
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double prev = term;
        term *= k / x;
        if (term < kEps * sum) break;
        if (term > prev) break;
        sum += term;
    }
    return std::exp(x) / x * sum;
}

}  // namespace

SpecialValue schlomilch_en(int n, double x) {
    if (n < 0) throw DomainError("schlomilch_en: n must be non-negative");
    if (std::isnan(x) || !(x > 0.0)) throw DomainError("schlomilch_en: x must be positive");
    if (n == 0) {
        const double v = std::exp(-x) / x;
        return {v, 4.0 * kEps * (1.0 + x) * v};
    }
    if (x > 1.0) {
        const double v = en_scaled_cf(n, x) * std::exp(-x);
        return {v, 8.0 * kEps * (1.0 + x) * v};
    }
    const double v = en_series(n, x);
    return {v, 8.0 * kEps * (std::abs(v) + 1.0)};
}

SpecialValue expint_e1(double x) { return schlomilch_en(1, x); }

SpecialValue expint_e1_scaled(double x) {
    if (std::isnan(x) || !(x > 0.0)) throw DomainError("expint_e1_scaled: x must be positive");
    if (x > 1.0) {
        const double v = en_scaled_cf(1, x);
        return {v, 8.0 * kEps * v};
    }
    const double v = en_series(1, x) * std::exp(x);
    return {v, 8.0 * kEps * (std::abs(v) + 1.0)};
}

SpecialValue expint_ei(double x) {
    if (std::isnan(x) || x == 0.0) throw DomainError("expint_ei: x must be non-zero");
    if (x < 0.0) {
        const SpecialValue e1 = expint_e1(-x);
        return {-e1.value, e1.abs_err_bound};
    }
    const double v = ei_positive(x);
    return {v, 8.0 * kEps * (std::abs(v) + std::abs(std::log(x)) + 1.0)};
}

}  // namespace itx::specfun
