#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace itx::detail {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
/// iteration on P_N. Only the non-negative half is stored.
template <std::size_t N>
struct GaussLegendre {
    static constexpr std::size_t kHalf = (N + 1) / 2;
    std::array<double, kHalf> nodes{};
    std::array<double, kHalf> weights{};

    GaussLegendre() {
        for (std::size_t i = 0; i < kHalf; ++i) {
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(N) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    static const GaussLegendre& instance() {
        static const GaussLegendre rule;
        return rule;
    }

    /// Integrates f over [a, b].
    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < kHalf; ++i) {
            const double dx = half * nodes[i];
            if (N % 2 == 1 && i == kHalf - 1) {
                sum += weights[i] * f(mid);
            } else {
                sum += weights[i] * (f(mid - dx) + f(mid + dx));
            }
        }
        return half * sum;
    }
};

}  // namespace itx::detail
