#include "itx/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

// Real-order Bessel functions.
//
// Small arguments use the ascending series, intermediate arguments the
// Temme series (x < 2) or Steed's continued fractions (x >= 2), and large
// arguments the Hankel asymptotic expansions.

namespace itx::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kPi = std::numbers::pi;
constexpr int kMaxIter = 200000;

// Switch points. Below kSeriesMax the ascending series loses at most a
// factor I_nu(x)/|J_nu(x)| ~ 10; above kAsymptoticMin the Hankel expansion
// reaches machine precision for |nu| <= kAsymptoticMaxOrder.
constexpr double kSeriesMax = 2.0;
constexpr double kTemmeMax = 2.0;
constexpr double kAsymptoticMin = 25.0;
constexpr double kAsymptoticMaxOrder = 4.0;

struct JY {
    double j;
    double y;
};

// J_nu(x) = sum_k (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), with the
// running sum of |terms| for the rounding estimate.
SpecialValue j_series(double nu, double x) {
    const double half = 0.5 * x;
    const double q = -half * half;
    double term = std::pow(half, nu) / gamma(nu + 1.0).value;
    double sum = term;
    double abs_sum = std::abs(term);
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        abs_sum += std::abs(term);
        if (std::abs(term) < kEps * std::abs(sum) * 0.25) break;
    }
    return {sum, 4.0 * kEps * abs_sum};
}

// exp(-x) I_nu(x) by the ascending series.
double i_series_scaled(double nu, double x) {
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::pow(half, nu) / gamma(nu + 1.0).value;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum) * 0.25) break;
    }
    return sum * std::exp(-x);
}

// Hankel asymptotic P, Q for order nu.
void hankel_pq(double nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    const double inv8x = 1.0 / (8.0 * x);
    p = 1.0;
    q = 0.0;
    double term = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) * inv8x / k;
        const double mag = std::abs(term);
        if (mag > prev) break;  // asymptotic series starts diverging
        prev = mag;
        // k odd contributes to Q, k even to P, with alternating signs.
        const int r = k % 4;
        if (r == 1) q += term;
        else if (r == 2) p -= term;
        else if (r == 3) q -= term;
        else p += term;
        if (mag < kEps * 0.1) break;
    }
}

JY jy_asymptotic(double nu, double x) {
    double p = 0.0;
    double q = 0.0;
    hankel_pq(nu, x, p, q);
    // chi = x - (nu/2 + 1/4) pi; expand to keep sin/cos of x exact.
    const double phase = (0.5 * nu + 0.25) * kPi;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    const double cchi = cx * cp + sx * sp;
    const double schi = sx * cp - cx * sp;
    const double amp = std::sqrt(2.0 / (kPi * x));
    return {amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)};
}

// Temme/Steed evaluation of J_nu and Y_nu for nu >= 0, x > 0.
JY jy_steed(double nu, double x) {
    const int nl = (x < kTemmeMax) ? static_cast<int>(nu + 0.5)
                                   : std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;

    // CF1: J'_nu / J_nu.
    int isign = 1;
    double h = nu * xi;
    if (h < kTiny) h = kTiny;
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    for (int i = 0; i < kMaxIter; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b - 1.0 / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) < kEps) break;
    }

    // Downward recurrence to order xmu.
    double rjl = isign * kTiny;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    const double rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;

    double rjmu = 0.0;
    double rymu = 0.0;
    double rymup = 0.0;
    double ry1 = 0.0;
    if (x < kTemmeMax) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = xmu * dd;
        const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas tg = temme_gammas(xmu);
        double ff = 2.0 / kPi * fact1 * (tg.gam1 * std::cosh(e) + tg.gam2 * fact2 * dd);
        e = std::exp(e);
        double p = e / (tg.gampl * kPi);
        double q = 1.0 / (e * kPi * tg.gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = kPi * pimu2 * fact3 * fact3;
        double cc = 1.0;
        dd = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        for (int i = 1; i < kMaxIter; ++i) {
            ff = (i * ff + p + q) / (i * i - xmu2);
            cc *= dd / i;
            p /= (i - xmu);
            q /= (i + xmu);
            const double del = cc * (ff + r * q);
            sum += del;
            const double del1 = cc * p - i * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + i q = (J' + i Y') / (J + i Y).
        double a = 0.25 - xmu2;
        double p = -0.5 * xi;
        double q = 1.0;
        const double br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for (int i = 1; i < kMaxIter; ++i) {
            a += 2.0 * i;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
        }
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    const double scale = rjmu / rjl;
    const double jo = rjl1 * scale;
    for (int i = 1; i <= nl; ++i) {
        const double rytemp = (xmu + i) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    (void)rjp1;
    return {jo, rymu};
}

// J and Y for nu >= 0, x > 0.
JY jy_nonneg(double nu, double x) {
    if (x >= kAsymptoticMin && nu <= kAsymptoticMaxOrder) return jy_asymptotic(nu, x);
    return jy_steed(nu, x);
}

struct IK {
    double i_scaled;
    double k_scaled;
};

// Temme/Steed evaluation of exp(-x) I_nu and exp(x) K_nu, nu >= 0, x > 0.
IK ik_steed(double nu, double x) {
    const int nl = static_cast<int>(nu + 0.5);
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    double h = nu * xi;
    if (h < kTiny) h = kTiny;
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    for (int i = 0; i < kMaxIter; ++i) {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    double ril = kTiny;
    double ripl = h * ril;
    const double ril1 = ril;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    const double f = ripl / ril;

    double rkmu = 0.0;
    double rk1 = 0.0;
    if (x < kTemmeMax) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = xmu * dd;
        const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas tg = temme_gammas(xmu);
        double ff = fact1 * (tg.gam1 * std::cosh(e) + tg.gam2 * fact2 * dd);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / tg.gampl;
        double q = 0.5 / (e * tg.gammi);
        double cc = 1.0;
        dd = x2 * x2;
        double sum1 = p;
        for (int i = 1; i < kMaxIter; ++i) {
            ff = (i * ff + p + q) / (i * i - xmu2);
            cc *= dd / i;
            p /= (i - xmu);
            q /= (i + xmu);
            const double del = cc * ff;
            sum += del;
            const double del1 = cc * (p - i * ff);
            sum1 += del1;
            if (std::abs(del) < std::abs(sum) * kEps) break;
        }
        // Scale to exp(x) K.
        const double ex = std::exp(x);
        rkmu = sum * ex;
        rk1 = sum1 * xi2 * ex;
    } else {
        double bb = 2.0 * (1.0 + x);
        double dd = 1.0 / bb;
        double hh = dd;
        double delh = dd;
        double q1 = 0.0;
        double q2 = 1.0;
        const double a1 = 0.25 - xmu2;
        double q = a1;
        double cc = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        for (int i = 1; i < kMaxIter; ++i) {
            a -= 2.0 * i;
            cc = -a * cc / (i + 1.0);
            const double qnew = (q1 - bb * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += cc * qnew;
            bb += 2.0;
            dd = 1.0 / (bb + a * dd);
            delh = (bb * dd - 1.0) * delh;
            hh += delh;
            const double dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < kEps) break;
        }
        hh = a1 * hh;
        rkmu = std::sqrt(kPi / (2.0 * x)) / s;
        rk1 = rkmu * (xmu + x + 0.5 - hh) * xi;
    }
    const double rkmup = xmu * xi * rkmu - rk1;
    // Wronskian I K' - I' K = -1/x is scale invariant under (exp(-x), exp(x)).
    const double rimu = xi / (f * rkmu - rkmup);
    const double io = rimu * ril1 / ril;
    for (int i = 1; i <= nl; ++i) {
        const double rktemp = (xmu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    return {io, rkmu};
}

// exp(-x) I_nu(x) for large x, ignoring the exp(-2x) branch.
double i_asymptotic_scaled(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * x * k);
        const double mag = std::abs(term);
        if (mag > prev) break;
        prev = mag;
        sum += term;
        if (mag < kEps * 0.1) break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

constexpr double kIAsymptoticMin = 40.0;

IK ik_nonneg(double nu, double x) {
    IK r = ik_steed(nu, x);
    if (x <= kSeriesMax) r.i_scaled = i_series_scaled(nu, x);
    else if (x >= kIAsymptoticMin && nu <= kAsymptoticMaxOrder) r.i_scaled = i_asymptotic_scaled(nu, x);
    return r;
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

SpecialValue bessel_j(double nu, double x) {
    if (std::isnan(nu) || std::isnan(x)) throw DomainError("bessel_j: NaN argument");
    if (x < 0.0) throw DomainError("bessel_j: x must be non-negative");
    if (nu < -1.0) throw DomainError("bessel_j: order below -1 is not supported");
    if (nu < 0.0 && is_integer(nu)) {
        const SpecialValue v = bessel_j(-nu, x);
        return {-v.value, v.abs_err_bound};
    }
    if (x == 0.0) {
        if (nu == 0.0) return {1.0, 0.0};
        if (nu > 0.0) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x <= kSeriesMax) return j_series(nu, x);
    if (nu >= 0.0) {
        const JY r = jy_nonneg(nu, x);
        const double amp = std::hypot(r.j, r.y);
        return {r.j, 16.0 * kEps * (std::abs(r.j) + amp)};
    }
    // J_{-a} = cos(a pi) J_a - sin(a pi) Y_a.
    const double a = -nu;
    const JY r = jy_nonneg(a, x);
    const double v = std::cos(a * kPi) * r.j - std::sin(a * kPi) * r.y;
    const double amp = std::hypot(r.j, r.y);
    return {v, 16.0 * kEps * (std::abs(v) + amp)};
}

SpecialValue bessel_y(double nu, double x) {
    if (std::isnan(nu) || std::isnan(x)) throw DomainError("bessel_y: NaN argument");
    if (!(x > 0.0)) throw DomainError("bessel_y: x must be positive");
    if (nu < 0.0) {
        // Y_{-a} = sin(a pi) J_a + cos(a pi) Y_a.
        const double a = -nu;
        const JY r = jy_nonneg(a, x);
        const double v = std::sin(a * kPi) * r.j + std::cos(a * kPi) * r.y;
        return {v, 16.0 * kEps * (std::abs(v) + std::hypot(r.j, r.y))};
    }
    const JY r = jy_nonneg(nu, x);
    return {r.y, 16.0 * kEps * (std::abs(r.y) + std::hypot(r.j, r.y))};
}

SpecialValue bessel_i_scaled(double nu, double x) {
    if (std::isnan(nu) || std::isnan(x)) throw DomainError("bessel_i: NaN argument");
    if (x < 0.0) throw DomainError("bessel_i: x must be non-negative");
    if (nu < 0.0 && is_integer(nu)) nu = -nu;
    if (x == 0.0) {
        if (nu == 0.0) return {1.0, 0.0};
        if (nu > 0.0) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x <= kSeriesMax) {
        const double v = i_series_scaled(nu, x);
        return {v, 8.0 * kEps * std::abs(v)};
    }
    if (nu >= 0.0) {
        const IK r = ik_nonneg(nu, x);
        return {r.i_scaled, 16.0 * kEps * std::abs(r.i_scaled)};
    }
    // I_{-a} = I_a + (2/pi) sin(a pi) K_a.
    const double a = -nu;
    const IK r = ik_nonneg(a, x);
    const double v = r.i_scaled + 2.0 / kPi * std::sin(a * kPi) * r.k_scaled * std::exp(-2.0 * x);
    return {v, 16.0 * kEps * std::abs(v)};
}

SpecialValue bessel_k_scaled(double nu, double x) {
    if (std::isnan(nu) || std::isnan(x)) throw DomainError("bessel_k: NaN argument");
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
    const IK r = ik_nonneg(std::abs(nu), x);
    return {r.k_scaled, 16.0 * kEps * std::abs(r.k_scaled)};
}

SpecialValue bessel_i(double nu, double x) {
    const SpecialValue s = bessel_i_scaled(nu, x);
    const double e = std::exp(x);
    return {s.value * e, s.abs_err_bound * e + kEps * std::abs(x) * std::abs(s.value) * e};
}

SpecialValue bessel_k(double nu, double x) {
    const SpecialValue s = bessel_k_scaled(nu, x);
    const double e = std::exp(-x);
    return {s.value * e, s.abs_err_bound * e + kEps * std::abs(x) * std::abs(s.value) * e};
}

}  // namespace itx::specfun
