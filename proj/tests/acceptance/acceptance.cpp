// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "itx/corpus.hpp"
#include "itx/identities.hpp"
#include "itx/specfun.hpp"
#include "itx/transforms.hpp"

#include "json.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace id = itx::identities;
namespace sf = itx::specfun;
namespace T = itx::transforms;
namespace corpus = itx::corpus;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = true;
    double worst = 0.0;  // worst relative residual seen
    std::string detail;

    void take(double rel, double tol) {
        if (!(rel <= tol)) ok = false;
        if (!(rel <= worst)) worst = rel;  // NaN sticks
    }
};

struct Criterion {
    int number;
    std::string title;
    double tol;
    double time_limit;  // seconds
    std::function<Outcome()> run;
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Verifies each record on `grid` at `tol`, folding every point into `o`.
void check_records(Outcome& o, const std::vector<std::string>& ids, const std::vector<id::Point>& grid, double tol) {
    for (const auto& rid : ids) {
        const auto rep = id::verify(id::find(rid), grid, tol);
        for (const auto& p : rep.points) {
            o.take(p.rel_residual, tol);
            if (!p.pass) o.detail += " " + rid + "@" + p.point.label() + ": " + p.reason + ";";
        }
    }
}

std::vector<id::Point> grid_of(const std::vector<std::pair<std::string, std::vector<double>>>& axes,
                               const std::function<bool(const id::Point&)>& keep = [](const id::Point&) { return true; }) {
    std::vector<id::Point> out{id::Point{}};
    for (const auto& [name, values] : axes) {
        std::vector<id::Point> next;
        for (const auto& p : out)
            for (double v : values) next.push_back(id::Point(p).set(name, v));
        out = std::move(next);
    }
    std::erase_if(out, [&](const id::Point& p) { return !keep(p); });
    return out;
}

// --- criteria -------------------------------------------------------------------

Outcome gl_power() {
    Outcome o;
    check_records(o, {"GL-POWER"}, grid_of({{"mu", {0.25, 0.5, 0.75}}, {"y", {0.5, 1.0, 2.0}}}), 1e-8);
    return o;
}

Outcome lemma1() {
    Outcome o;
    check_records(o, {"LEMMA1-GAUSS", "LEMMA1-INVSQ"}, grid_of({{"y", {0.5, 1.0, 2.0}}}), 1e-6);
    return o;
}

Outcome gl_jnu() {
    Outcome o;
    check_records(o, {"GL-JNU"}, grid_of({{"nu", {0.0, 0.5}}, {"z", {1.0, 2.0}}, {"y", {0.5, 1.0, 2.0}}}), 1e-6);
    return o;
}

Outcome gl_jnu1() {
    Outcome o;
    const auto strip = [](const id::Point& p) { return p.get("nu") > -1.0 && p.get("nu") < 0.5; };
    check_records(o, {"GL-JNU1"}, grid_of({{"nu", {0.0, 0.5}}, {"z", {1.0, 2.0}}, {"y", {0.5, 1.0, 2.0}}}, strip),
                  1e-6);
    return o;
}

Outcome parseval_goldstein() {
    Outcome o;
    for (const char* pair : {"GAUSS-EXP", "GAUSS-INVSQ", "EXP-INVSQ"}) {
        double r[3];
        for (int k = 0; k < 3; ++k) {
            const std::string rid = "PG-" + std::to_string(k + 1) + "-" + pair;
            const auto rep = id::verify(id::find(rid), std::nullopt, 1e-6);
            r[k] = rep.points.at(0).rel_residual;
            o.take(r[k], 1e-6);
            if (!rep.ok()) o.detail += " " + rid + ": " + rep.points[0].reason + ";";
        }
        // the third relation is implied by the first two
        if (!(r[2] <= 1.01 * (r[0] + r[1]) + 1e-14)) {
            o.ok = false;
            o.detail += std::string(" triangle violated for ") + pair + ";";
        }
    }
    return o;
}

Outcome ex1() {
    Outcome o;
    const std::vector<std::string> ids = {"EX1-A", "EX1-B", "EX1-C", "EX1-D"};
    check_records(o, ids, {{{"y", 1.0}, {"z", 2.0}}, {{"y", 1.0}, {"z", 4.0}}, {{"y", 0.5}, {"z", 1.0}}}, 1e-6);
    Outcome near;
    check_records(near, ids, {{{"y", 0.9}, {"z", 1.0}}}, 1e-4);
    o.ok = o.ok && near.ok;
    o.detail += near.detail;
    std::ostringstream s;
    s << " (y/z = 0.9: worst rel " << near.worst << " <= 1e-4)";
    o.detail += s.str();
    return o;
}

Outcome ex2() {
    Outcome o;
    check_records(o, {"EX2-DAW", "REM-E2"}, grid_of({{"z", {1.0, 2.0}}, {"y", {0.5, 1.0}}}), 1e-6);
    return o;
}

Outcome ex3() {
    Outcome o;
    check_records(o, {"EX3-A", "EX3-B"}, grid_of({{"mu", {0.25, 0.5}}, {"nu", {0.25, 0.5}}, {"z", {1.0, 2.0}}}),
                  1e-7);
    return o;
}

Outcome reductions() {
    Outcome o;
    const double tol = 1e-8;
    const itx::quad::Tolerance tight{1e-11, 1e-15, 400000};
    const double s2pi = std::sqrt(2.0 / kPi);
    const double spi2 = std::sqrt(kPi / 2.0);
    auto note = [&o](const std::string& what, double r, double t) {
        o.take(r, t);
        if (!(r <= t)) {
            std::ostringstream s;
            s << " " << what << " rel " << r << ";";
            o.detail += s.str();
        }
    };
    for (const char* name : {"gauss", "exp", "inv_sq_z"})
        for (double y : {0.5, 1.0, 2.0}) {
            const auto f = corpus::make(name);
            const std::string at = std::string(name) + "@" + std::to_string(y);
            // order +1/2 Hankel kernel is sqrt(2/pi) sin(xy)
            note("hankel(1/2) vs sine " + at, rel(T::hankel(0.5, f, y, tight).value,
                                                   s2pi * T::fourier_sin(f, y, tight).value), tol);
            // order -1/2 Hankel kernel is sqrt(2/pi) cos(xy)
            note("hankel(-1/2) vs cosine " + at, rel(T::hankel(-0.5, f, y, tight).value,
                                                      s2pi * T::fourier_cos(f, y, tight).value), tol);
            // K kernel of order +-1/2 is sqrt(pi/2) e^{-xy}
            const double lap = T::laplace(f, y, tight).value;
            note("k(1/2) vs laplace " + at, rel(T::k_transform(0.5, f, y, tight).value, spi2 * lap), tol);
            note("k(-1/2) vs laplace " + at, rel(T::k_transform(-0.5, f, y, tight).value, spi2 * lap), tol);
            // L2 through Laplace and back
            note("l2 via laplace " + at, rel(T::l2_via_laplace(f, y, tight).value, T::l2(f, y, tight).value), tol);
            note("laplace via l2 " + at, rel(T::laplace_via_l2(f, y, tight).value, lap), tol);
        }
    return o;
}

Outcome specfun_suite() {
    Outcome o;
    const double tol = 1e-12;
    for (double x : {1e-4, 0.01, 0.3, 1.0, 2.0, 5.5, 17.0, 40.0, 123.0}) {
        const double s = std::sqrt(2.0 / (kPi * x));
        // absolute on the scale of the envelope, so zeros of sin/cos don't blow up
        o.take(std::abs(sf::bessel_j(0.5, x) - s * std::sin(x)) / s, tol);
        o.take(std::abs(sf::bessel_j(-0.5, x) - s * std::cos(x)) / s, tol);
        o.take(rel(sf::bessel_k(0.5, x), std::sqrt(kPi / (2.0 * x)) * std::exp(-x)), tol);
    }
    for (double a : {0.05, 0.125, 0.25, 0.5, 1.3, 4.0, 11.25})
        o.take(rel(sf::gamma(2.0 * a), std::pow(4.0, a) / (2.0 * std::sqrt(kPi)) * sf::gamma(a) * sf::gamma(a + 0.5)),
               tol);
    using big = boost::multiprecision::cpp_bin_float_50;
    for (double x : {0.01, 0.5, 0.9241388730, 1.5, 3.0, 6.0, 12.0}) {
        const big bx(x);
        const big d = boost::math::quadrature::gauss_kronrod<big, 61>::integrate(
            [&](big t) { return exp((t - bx) * (t + bx)); }, big(0), bx, 15, big(1e-40));
        o.take(rel(sf::dawson(x), static_cast<double>(d)), tol);
    }
    return o;
}

Outcome verify_all_binary() {
    Outcome o;
    FILE* p = popen(ITX_BINARY " verify --all --format json", "r");
    if (!p) return {false, 0.0, " could not start the itx binary"};
    std::string out;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = pclose(p);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    try {
        const auto j = nlohmann::json::parse(out);
        const int n_fail = j["summary"]["n_fail"];
        const int n_pass = j["summary"]["n_pass"];
        o.worst = j["summary"]["worst_rel"].is_number() ? j["summary"]["worst_rel"].get<double>() : NAN;
        o.ok = code == 0 && n_fail == 0;
        o.detail = " " + std::to_string(n_pass) + " pass, " + std::to_string(n_fail) + " fail, exit " +
                   std::to_string(code);
    } catch (const std::exception& e) {
        o = {false, 0.0, std::string(" unreadable output: ") + e.what()};
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "GL-POWER: Glasser transform of x^(mu-1)", 1e-8, 5, gl_power},
        {2, "LEMMA1: nested L2 equals Glasser of x f", 1e-6, 30, lemma1},
        {3, "GL-JNU: Glasser of J_nu(zx) vs I K product", 1e-6, 60, gl_jnu},
        {4, "GL-JNU1: same grid inside -1 < nu < 1/2", 1e-6, 60, gl_jnu1},
        {5, "Parseval-Goldstein relations and triangle", 1e-6, 60, parseval_goldstein},
        {6, "EX1 real forms; y/z = 0.9 at 1e-4", 1e-6, 60, ex1},
        {7, "EX2-DAW and REM-E2 via Dawson", 1e-6, 60, ex2},
        {8, "EX3 gamma-ratio identities", 1e-7, 60, ex3},
        {9, "reductions: half-order Hankel/K, L2 <-> Laplace", 1e-8, 60, reductions},
        {10, "special functions: half orders, duplication, Dawson", 1e-12, 30, specfun_suite},
        {11, "itx verify --all", 0.0, 300, verify_all_binary},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, NAN, std::string(" threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.time_limit;
        const bool pass = o.ok && in_time;
        failures += !pass;

        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title << "  worst rel "
             << o.worst;
        if (c.tol > 0) line << " (tol " << c.tol << ")";
        line << ", " << std::fixed;
        line.precision(2);
        line << secs << " s (limit " << c.time_limit << " s)" << (in_time ? "" : " TOO SLOW") << o.detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
