#include "itx/specfun.hpp"
#include "itx/detail/gauss_legendre.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace itx::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Above this argument I0 - L0 uses its asymptotic expansion.
constexpr double kDiffAsymptoticMin = 35.0;
// Below this argument I0 - L0 is the direct difference of the two series.
constexpr double kDiffSeriesMax = 1.0;

double l0_series(double x, double& abs_sum) {
    // sum_k (x/2)^{2k+1} / Gamma(k+3/2)^2
    const double half = 0.5 * x;
    const double q = half * half;
    const double g0 = 0.5 * std::sqrt(kPi);  // Gamma(3/2)
    double term = half / (g0 * g0);
    double sum = term;
    for (int k = 0; k < 1000; ++k) {
        const double a = k + 1.5;
        term *= q / (a * a);
        sum += term;
        if (term < kEps * sum * 0.25) break;
    }
    abs_sum = sum;
    return sum;
}

double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < kEps * sum * 0.25) break;
    }
    return sum;
}

// (2/pi) int_0^{pi/2} exp(-x sin t) dt on geometrically graded panels.
double i0_minus_l0_integral(double x) {
    const auto& gl = detail::GaussLegendre<24>::instance();
    auto f = [x](double t) { return std::exp(-x * std::sin(t)); };
    const double end = 0.5 * kPi;
    double a = 0.0;
    double b = std::min(end, 1.0 / x);
    double sum = 0.0;
    while (a < end) {
        sum += gl.integrate(f, a, b);
        a = b;
        b = std::min(end, 2.0 * b);
    }
    return 2.0 / kPi * sum;
}

// (2/pi) sum_k ((2k-1)!!)^2 / x^{2k+1}
double i0_minus_l0_asymptotic(double x) {
    const double inv2 = 1.0 / (x * x);
    double term = 1.0 / x;
    double sum = term;
    double prev = term;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv2;
        if (term > prev) break;
        prev = term;
        sum += term;
        if (term < kEps * sum * 0.1) break;
    }
    return 2.0 / kPi * sum;
}

}  // namespace

SpecialValue struve_l0(double x) {
    if (std::isnan(x)) throw DomainError("struve_l0: NaN argument");
    if (x < 0.0) throw DomainError("struve_l0: x must be non-negative");
    if (x == 0.0) return {0.0, 0.0};
    double abs_sum = 0.0;
    const double v = l0_series(x, abs_sum);
    return {v, 4.0 * kEps * abs_sum};
}

SpecialValue i0_minus_l0(double x) {
    if (std::isnan(x)) throw DomainError("i0_minus_l0: NaN argument");
    if (x < 0.0) throw DomainError("i0_minus_l0: x must be non-negative");
    if (x == 0.0) return {1.0, 0.0};
    if (x <= kDiffSeriesMax) {
        double abs_sum = 0.0;
        const double i0 = i0_series(x);
        const double v = i0 - l0_series(x, abs_sum);
        return {v, 4.0 * kEps * (i0 + abs_sum)};
    }
    const double v = x >= kDiffAsymptoticMin ? i0_minus_l0_asymptotic(x) : i0_minus_l0_integral(x);
    return {v, 16.0 * kEps * v};
}

}  // namespace itx::specfun
