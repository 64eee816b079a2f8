#include "itx/quadrature.hpp"
#include "checked.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

// Double-exponential (tanh-sinh / exp-sinh) rules with level halving.
//
// Level 0 samples t on the integers and fixes the truncation window; each
// further level halves the step and adds the odd nodes. The error estimate
// is the difference between consecutive levels plus a rounding floor.

namespace itx::quad {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLevel = 10;
constexpr int kMinLevel = 2;
constexpr double kNegligible = 1e-20;
constexpr double kMaxT = 7.0;

// A node of a DE rule: weight * integrand, or nothing if the mapping
// under/overflowed.
template <class Term>
struct DoubleExponential {
    Term term;  // bool(double t, double& weighted_value)
    const Tolerance& tol;
    long evals = 0;
    double abs_sum = 0.0;

    bool sample(double t, double& out) {
        if (!term(t, out)) return false;
        ++evals;
        abs_sum += std::abs(out);
        return true;
    }

    // Scans t = 0, +-1, +-2, ... and returns the level-0 sum.
    double scan(double& t_lo, double& t_hi) {
        double center = 0.0;
        double sum = 0.0;
        double max_term = 0.0;
        if (sample(0.0, center)) {
            sum = center;
            max_term = std::abs(center);
        }
        for (int side : {+1, -1}) {
            int quiet = 0;
            double t = 0.0;
            double last = 0.0;
            for (int k = 1; k <= static_cast<int>(kMaxT); ++k) {
                t = side * static_cast<double>(k);
                double v = 0.0;
                if (!sample(t, v)) break;
                last = t;
                sum += v;
                max_term = std::max(max_term, std::abs(v));
                if (max_term > 0.0 && std::abs(v) <= kNegligible * max_term) {
                    if (++quiet >= 2 && k >= 2) break;
                } else {
                    quiet = 0;
                }
            }
            if (side > 0) t_hi = last;
            else t_lo = last;
        }
        return sum;
    }

    IntegrationResult run() {
        double t_lo = 0.0;
        double t_hi = 0.0;
        double raw = scan(t_lo, t_hi);
        double h = 1.0;
        double estimate = raw * h;
        IntegrationResult res;
        double err = std::numeric_limits<double>::infinity();
        for (int level = 1; level <= kMaxLevel; ++level) {
            h *= 0.5;
            // New nodes at odd multiples of h inside [t_lo, t_hi].
            const long n_lo = static_cast<long>(std::ceil(t_lo / h));
            const long n_hi = static_cast<long>(std::floor(t_hi / h));
            const long n_new = (n_hi - n_lo) / 2 + 1;
            if (evals + n_new > tol.max_evals) break;
            double added = 0.0;
            for (long n = n_lo; n <= n_hi; ++n) {
                if (n % 2 == 0) continue;
                double v = 0.0;
                if (sample(static_cast<double>(n) * h, v)) added += v;
            }
            raw += added;
            const double next = raw * h;
            err = std::abs(next - estimate);
            estimate = next;
            const double noise = 4.0 * kEps * abs_sum * h;
            if (level >= kMinLevel && err + noise <= tol.target(estimate)) {
                res.converged = true;
                err += noise;
                break;
            }
        }
        res.value = estimate;
        res.abs_err = std::isfinite(err) ? err : std::abs(estimate);
        res.n_evals = evals;
        return res;
    }
};

template <class Term>
IntegrationResult run_rule(Term term, const Tolerance& tol) {
    DoubleExponential<Term> rule{std::move(term), tol};
    return rule.run();
}

}  // namespace

IntegrationResult tanh_sinh_unit(const std::function<double(double, double)>& g, const Tolerance& tol) {
    tol.validate();
    auto term = [&g](double t, double& out) {
        const double s = kPi * std::sinh(t);
        double u = 0.0;
        double c = 0.0;
        if (s >= 0.0) {
            const double e = std::exp(-s);
            u = 1.0 / (1.0 + e);
            c = e / (1.0 + e);
        } else {
            const double e = std::exp(s);
            u = e / (1.0 + e);
            c = 1.0 / (1.0 + e);
        }
        if (u <= 0.0 || c <= 0.0) return false;
        const double w = kPi * std::cosh(t) * u * c;
        out = w * detail::checked(g(u, c), u);
        return true;
    };
    return run_rule(term, tol);
}

IntegrationResult exp_sinh(const RealFn& f, double scale, const Tolerance& tol) {
    tol.validate();
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("exp_sinh: scale must be positive");
    auto term = [&f, scale](double t, double& out) {
        const double s = 0.5 * kPi * std::sinh(t);
        if (s > 690.0 || s < -690.0) return false;
        const double x = scale * std::exp(s);
        if (!(x > 0.0) || !std::isfinite(x)) return false;
        const double w = x * 0.5 * kPi * std::cosh(t);
        out = w * detail::checked(f(x), x);
        return true;
    };
    return run_rule(term, tol);
}

}  // namespace itx::quad
