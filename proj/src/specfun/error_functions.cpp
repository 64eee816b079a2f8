#include "itx/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace itx::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// erf uses its positive-term series below this point, erfc a continued
// fraction above it.
constexpr double kErfSplit = 2.0;

// erf(x) = (2/sqrt(pi)) exp(-x^2) sum_n 2^n x^{2n+1} / (2n+1)!!, x >= 0.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 500; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < kEps * sum * 0.25) break;
    }
    return 2.0 * kInvSqrtPi * std::exp(-x2) * sum;
}

// erfc(x) for x >= kErfSplit by the Laplace continued fraction (modified Lentz).
double erfc_cf(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x * x) * kInvSqrtPi / f;
}

// Rybicki's exponentially convergent sum with step h = 0.2; the
// discretisation error is of order exp(-(pi / 2h)^2) ~ 1e-27.
constexpr double kDawsonStep = 0.2;
constexpr int kDawsonTerms = 20;
constexpr double kDawsonSeriesMax = 0.2;
constexpr double kDawsonAsymptoticMin = 50.0;

const std::array<double, kDawsonTerms>& dawson_weights() {
    static const auto table = [] {
        std::array<double, kDawsonTerms> c{};
        for (int i = 0; i < kDawsonTerms; ++i) {
            const double t = (2.0 * i + 1.0) * kDawsonStep;
            c[i] = std::exp(-t * t);
        }
        return c;
    }();
    return table;
}

double dawson_series(double x) {
    // sum_k (-1)^k 2^k x^{2k+1} / (2k+1)!!
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 60; ++k) {
        term *= -2.0 * x2 / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum) * 0.25) break;
    }
    return sum;
}

double dawson_asymptotic(double x) {
    // (1/2x) sum_k (2k-1)!! / (2x^2)^k
    const double inv = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 30; ++k) {
        term *= (2.0 * k - 1.0) * inv;
        sum += term;
        if (term < kEps * sum * 0.25) break;
    }
    return sum / (2.0 * x);
}

double dawson_rybicki(double ax) {
    const auto& c = dawson_weights();
    const int n0 = 2 * static_cast<int>(std::lround(0.5 * ax / kDawsonStep));
    const double xp = ax - n0 * kDawsonStep;
    double e1 = std::exp(2.0 * xp * kDawsonStep);
    const double e2 = e1 * e1;
    double d1 = n0 + 1.0;
    double d2 = d1 - 2.0;
    double sum = 0.0;
    for (int i = 0; i < kDawsonTerms; ++i) {
        sum += c[i] * (e1 / d1 + 1.0 / (d2 * e1));
        d1 += 2.0;
        d2 -= 2.0;
        e1 *= e2;
    }
    return kInvSqrtPi * std::exp(-xp * xp) * sum;
}

}  // namespace

SpecialValue erf(double x) {
    if (std::isnan(x)) throw DomainError("erf: NaN argument");
    const double ax = std::abs(x);
    double v = 0.0;
    if (ax < kErfSplit) v = erf_series(ax);
    else v = 1.0 - erfc_cf(ax);
    v = std::copysign(v, x);
    return {v, 4.0 * kEps * std::abs(v)};
}

SpecialValue erfc(double x) {
    if (std::isnan(x)) throw DomainError("erfc: NaN argument");
    if (x >= kErfSplit) {
        const double v = erfc_cf(x);
        return {v, 8.0 * kEps * (1.0 + x * x) * v};
    }
    const double e = erf_series(std::abs(x));
    const double v = x >= 0.0 ? 1.0 - e : 1.0 + e;
    return {v, 4.0 * kEps};
}

SpecialValue dawson(double x) {
    if (std::isnan(x)) throw DomainError("dawson: NaN argument");
    const double ax = std::abs(x);
    double v = 0.0;
    if (ax < kDawsonSeriesMax) v = dawson_series(ax);
    else if (ax > kDawsonAsymptoticMin) v = dawson_asymptotic(ax);
    else v = dawson_rybicki(ax);
    v = std::copysign(v, x);
    return {v, 8.0 * kEps * std::abs(v)};
}

}  // namespace itx::specfun
