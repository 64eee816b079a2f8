#include "itx/corpus.hpp"
#include "itx/identities.hpp"
#include "itx/specfun.hpp"
#include "itx/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace itx::identities {

namespace T = itx::transforms;
namespace sf = itx::specfun;
using quad::Algebraic;
using quad::DecayClass;
using quad::Exponential;
using quad::Function1D;
using quad::Gaussian;
using quad::IntegrationResult;
using quad::Singularity;
using quad::Tolerance;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Outer quadrature targets; nested inner transforms run 100x tighter and
// purely relative, since outer weights like u^(mu-1) amplify the far tail.
const Tolerance kSmooth{1e-10, 1e-15, 400000};
const Tolerance kOsc{1e-9, 1e-14, 400000};
const Tolerance kInner{1e-12, 1e-300, 400000};

Evaluation from(const IntegrationResult& r) { return {r.value, r.abs_err, r.converged}; }

Evaluation from(const IntegrationResult& r, const T::InnerTransform& inner) {
    return {r.value, r.abs_err, r.converged && inner.all_converged()};
}

Evaluation exact(double v) { return {v, 0.0, true}; }

Evaluation times(Evaluation e, double c) {
    e.value *= c;
    e.abs_err *= std::abs(c);
    return e;
}

// G{x/(x^2+z^2); y}, all three regimes of y/z.
double glasser_x_over_sq(double y, double z) {
    const double t = y / z;
    if (t == 1.0) return 1.0 / z;
    if (t < 1.0) return std::acos(t) / std::sqrt(z * z - y * y);
    return std::acosh(t) / std::sqrt(y * y - z * z);
}

double sv(const sf::SpecialValue& v) { return v.value; }

// Cartesian product of named axes, filtered by the domain.
std::vector<Point> product(const std::vector<std::pair<std::string, std::vector<double>>>& axes,
                           const std::function<bool(const Point&)>& domain) {
    std::vector<Point> out{Point{}};
    for (const auto& [name, values] : axes) {
        std::vector<Point> next;
        for (const Point& p : out)
            for (double v : values) {
                Point q = p;
                q.set(name, v);
                next.push_back(q);
            }
        out = std::move(next);
    }
    std::erase_if(out, [&](const Point& p) { return !domain(p); });
    return out;
}

const std::vector<double> kYs = {0.5, 1.0, 2.0};
const std::vector<double> kZs = {0.5, 1.0, 2.0};
const std::vector<double> kMus = {0.25, 0.5, 0.75};
const std::vector<double> kNus = {-0.5, 0.0, 0.5};

bool always(const Point&) { return true; }

// ---------------------------------------------------------------------------
// Nested pipelines shared by several families. Each call builds fresh inner
// state, so concurrent evaluations never share memo tables.

// u -> L2{f; u}
T::InnerTransform inner_l2(const Function1D& f) {
    return T::InnerTransform([f](double u) { return T::l2(f, u, kInner); });
}

// u -> G{x f(x); u}
T::InnerTransform inner_glasser_xf(const Function1D& f) {
    const Function1D xf = T::times_power(f, 1.0);
    return T::InnerTransform([xf](double u) { return T::glasser(xf, u, kInner); });
}

// L2{(1/u) L2{f; u}; y}; h ~ 1/u at 0 and u^-3 at infinity.
Evaluation lemma_lhs(const Function1D& f, bool log_at_zero, double y) {
    auto inner = inner_l2(f);
    const Function1D h = Function1D::make([inner](double u) { return inner(u) / u; }, Algebraic{3.0},
                                          Singularity{1.0, log_at_zero});
    return from(T::l2(h, y, kSmooth), inner);
}

// L2{y^a L2{f; 1/(2y)}; z}; the inner transform tends to int x f at y -> inf.
Evaluation remark_lhs(const Function1D& f, double a, double z) {
    auto inner = inner_l2(f);
    const Function1D h = Function1D::make([inner, a](double y) { return std::pow(y, a) * inner(0.5 / y); },
                                          Algebraic{-a}, Singularity::power(-(a + 2.0)));
    return from(T::l2(h, z, kSmooth), inner);
}

// int_0^inf u^a G{x f; u} du with G ~ 1/u at infinity.
Function1D glasser_moment_fn(const T::InnerTransform& g, double a) {
    return Function1D::make([g, a](double u) { return std::pow(u, a) * g(u); }, Algebraic{1.0 - a},
                            Singularity::power(-a));
}

// ---------------------------------------------------------------------------

struct Builder {
    std::vector<IdentityRecord> records;

    IdentityRecord& add(IdentityRecord r) {
        if (!r.domain) r.domain = always;
        records.push_back(std::move(r));
        return records.back();
    }
};

void lemma1(Builder& b) {
    const std::string anchor = "Lemma 1: \"provided that the integrals involved converge absolutely\"";
    const std::string lhs = "L2{(1/u) L2{f(x); u}; y}";
    const std::string rhs = "(sqrt(pi)/2) G{x f(x); y}";

    const Function1D gauss = corpus::make("gauss");
    b.add({"LEMMA1-GAUSS", "LEMMA1", anchor, lhs + ", f = exp(-x^2)", rhs + " = (pi/4) e^{y^2} erfc(y)", "",
           TolClass::smooth, [gauss](const Point& p) { return lemma_lhs(gauss, false, p.get("y")); },
           [](const Point& p) {
               const double y = p.get("y");
               return exact(0.25 * kPi * std::exp(y * y) * sf::erfc(y).value);
           },
           always, product({{"y", kYs}}, always)});

    const double z = 2.0;
    const Function1D inv = corpus::make("inv_sq_z", {.z = z});
    b.add({"LEMMA1-INVSQ", "LEMMA1", anchor, lhs + ", f = 1/(x^2+4)",
           rhs + " = (sqrt(pi)/2) arccos(y/2)/sqrt(4-y^2)", "", TolClass::smooth,
           [inv](const Point& p) { return lemma_lhs(inv, true, p.get("y")); },
           [z](const Point& p) { return exact(0.5 * kSqrtPi * glasser_x_over_sq(p.get("y"), z)); }, always,
           product({{"y", kYs}}, always)});
}

void glasser_corollaries(Builder& b) {
    auto strip_mu = [](const Point& p) { return p.get("mu") >= 0.05 && p.get("mu") <= 0.95; };
    b.add({"GL-POWER", "GL-POWER", "Corollary 1 of Lemma 1: \"where B(x,y) is the beta function\"",
           "G{x^(mu-1); y}", "2^(-mu) B(mu, 1/2 - mu/2) y^(mu-1)", "", TolClass::smooth,
           [](const Point& p) {
               const Function1D f = corpus::make("pow_mu_minus_1", {.mu = p.get("mu")});
               return from(T::glasser(f, p.get("y"), kSmooth));
           },
           [](const Point& p) {
               const double mu = p.get("mu");
               return exact(std::pow(2.0, -mu) * sv(sf::beta(mu, 0.5 - 0.5 * mu)) * std::pow(p.get("y"), mu - 1.0));
           },
           strip_mu, product({{"mu", kMus}, {"y", kYs}}, strip_mu)});

    auto strip_jnu1 = [](const Point& p) { return p.get("nu") >= -0.95 && p.get("nu") <= 0.45; };
    b.add({"GL-JNU1", "GL-JNU1", "Corollary 2 of Lemma 1", "G{x^(nu+1) J_nu(z x); y}",
           "sqrt(2/(pi z)) y^(nu+1/2) K_(nu+1/2)(z y)",
           "strip -1 < nu < 1/2; default nu grid {-0.5, 0, 0.5} restricted to it", TolClass::oscillatory,
           [](const Point& p) {
               const Function1D f = corpus::make("x_pow_bessel_j", {.nu = p.get("nu"), .z = p.get("z")});
               return from(T::glasser(f, p.get("y"), kOsc));
           },
           [](const Point& p) {
               const double nu = p.get("nu"), y = p.get("y"), z = p.get("z");
               return exact(std::sqrt(2.0 / (kPi * z)) * std::pow(y, nu + 0.5) * sv(sf::bessel_k(nu + 0.5, z * y)));
           },
           strip_jnu1, product({{"nu", kNus}, {"z", {1.0, 2.0}}, {"y", kYs}}, strip_jnu1)});

    auto strip_jnu = [](const Point& p) { return p.get("nu") >= -0.95; };
    b.add({"GL-JNU", "GL-JNU", "Corollary 3 of Lemma 1: \"Re(nu) > -1\"", "G{J_nu(z x); y}",
           "I_(nu/2)(z y/2) K_(nu/2)(z y/2)", "", TolClass::oscillatory,
           [](const Point& p) {
               const Function1D f = corpus::make("bessel_j", {.nu = p.get("nu"), .z = p.get("z")});
               return from(T::glasser(f, p.get("y"), kOsc));
           },
           [](const Point& p) {
               const double h = 0.5 * p.get("nu"), t = 0.5 * p.get("z") * p.get("y");
               return exact(sv(sf::bessel_i_scaled(h, t)) * sv(sf::bessel_k_scaled(h, t)));
           },
           strip_jnu, product({{"nu", kNus}, {"z", {1.0, 2.0}}, {"y", kYs}}, strip_jnu)});
}

// Theorem 1 for one (f, g) pair. Both sides of every relation are
// quadrature pipelines.
struct PgPair {
    std::string tag;
    std::string text;
    Function1D f;
    Function1D g;
    bool log_f;  // L2{f; y} ~ -log y at the origin
    bool log_g;
};

Evaluation pg_l2_product(const PgPair& pr) {
    auto lf = inner_l2(pr.f);
    auto lg = inner_l2(pr.g);
    const Function1D h = Function1D::make([lf, lg](double y) { return lf(y) * lg(y); }, Algebraic{4.0},
                                          Singularity{0.0, pr.log_f || pr.log_g});
    const IntegrationResult r = quad::integrate_semi_infinite(h, kSmooth);
    return {r.value, r.abs_err, r.converged && lf.all_converged() && lg.all_converged()};
}

// (sqrt(pi)/2) int x f(x) G{u g(u); x} dx
Evaluation pg_glasser_side(const Function1D& f, const Function1D& g) {
    auto gg = inner_glasser_xf(g);
    const Function1D xf = T::times_power(f, 1.0);
    // G{u g(u); x} ~ 1/x: an algebraic f gains one power of decay back.
    DecayClass decay = f.decay;
    if (const auto* a = std::get_if<Algebraic>(&f.decay)) decay = Algebraic{a->p};
    const Function1D h =
        Function1D::make([xf, gg](double x) { return xf(x) * gg(x); }, decay, xf.at_zero, f.scale);
    return times(from(quad::integrate_semi_infinite(h, kSmooth), gg), 0.5 * kSqrtPi);
}

void theorem1(Builder& b) {
    const std::vector<PgPair> pairs = {
        {"GAUSS-EXP", "f = exp(-x^2), g = exp(-u)", corpus::make("gauss"), corpus::make("exp"), false, false},
        {"GAUSS-INVSQ", "f = exp(-x^2), g = 1/(u^2+4)", corpus::make("gauss"), corpus::make("inv_sq_z", {.z = 2.0}),
         false, true},
        {"EXP-INVSQ", "f = exp(-x), g = 1/(u^2+1)", corpus::make("exp"), corpus::make("inv_sq_z", {.z = 1.0}), false,
         true},
    };
    const std::string anchor = "Theorem 1: \"then the Parseval-Goldstein type relations\"";
    const std::string a = "int L2{f; y} L2{g; y} dy";
    const std::string bx = "(sqrt(pi)/2) int x f(x) G{u g(u); x} dx";
    const std::string cu = "(sqrt(pi)/2) int u g(u) G{x f(x); u} du";
    for (const PgPair& pr : pairs) {
        b.add({"PG-1-" + pr.tag, "PG", anchor + " (first relation)", a + ", " + pr.text, bx, "", TolClass::smooth,
               [pr](const Point&) { return pg_l2_product(pr); },
               [pr](const Point&) { return pg_glasser_side(pr.f, pr.g); }, always, {Point{}}});
        b.add({"PG-2-" + pr.tag, "PG", anchor + " (second relation)", a + ", " + pr.text, cu, "", TolClass::smooth,
               [pr](const Point&) { return pg_l2_product(pr); },
               [pr](const Point&) { return pg_glasser_side(pr.g, pr.f); }, always, {Point{}}});
        b.add({"PG-3-" + pr.tag, "PG", anchor + " (third relation)", bx + ", " + pr.text, cu,
               "(sqrt(pi)/2) factors cancel; compared as written", TolClass::smooth,
               [pr](const Point&) { return pg_glasser_side(pr.f, pr.g); },
               [pr](const Point&) { return pg_glasser_side(pr.g, pr.f); }, always, {Point{}}});
    }
}

void moments(Builder& b) {
    struct Case {
        std::string tag;
        std::string name;
        double (*moment)(double mu);  // int x^mu f(x) dx
    };
    const std::vector<Case> cases = {
        {"GAUSS", "gauss", [](double mu) { return 0.5 * sv(sf::gamma(0.5 * (mu + 1.0))); }},
        {"EXP", "exp", [](double mu) { return sv(sf::gamma(mu + 1.0)); }},
    };
    auto strip = [](const Point& p) { return p.get("mu") >= 0.05 && p.get("mu") <= 0.95; };
    const std::string anchor = "Corollary 1 of Theorem 1: \"converge absolutely and 0<Re(mu)<1\"";

    for (const Case& c : cases) {
        const Function1D f = corpus::make(c.name);
        const std::string ftext = c.name == "gauss" ? "f = exp(-x^2)" : "f = exp(-x)";
        auto l2_moment = [f](const Point& p) {
            const double mu = p.get("mu");
            auto lf = inner_l2(f);
            const Function1D h = Function1D::make([lf, mu](double y) { return std::pow(y, -mu) * lf(y); },
                                                  Algebraic{2.0 + mu}, Singularity::power(mu));
            return from(quad::integrate_semi_infinite(h, kSmooth), lf);
        };
        auto glasser_moment = [f](const Point& p) {
            const double mu = p.get("mu");
            auto g = inner_glasser_xf(f);
            return from(quad::integrate_semi_infinite(glasser_moment_fn(g, mu - 1.0), kSmooth), g);
        };
        auto moment = c.moment;
        const std::vector<Point> grid = product({{"mu", kMus}}, strip);

        b.add({"MOMENT-1-" + c.tag, "MOMENT", anchor + " (first formula)", "int y^-mu L2{f; y} dy, " + ftext,
               "(1/2) Gamma(1/2 - mu/2) int x^mu f(x) dx", "", TolClass::smooth, l2_moment,
               [moment](const Point& p) {
                   const double mu = p.get("mu");
                   return exact(0.5 * sv(sf::gamma(0.5 - 0.5 * mu)) * moment(mu));
               },
               strip, grid});
        b.add({"MOMENT-2-" + c.tag, "MOMENT", anchor + " (second formula)", "int y^-mu L2{f; y} dy, " + ftext,
               "sqrt(pi)/Gamma(mu/2) int u^(mu-1) G{x f(x); u} du", "", TolClass::smooth, l2_moment,
               [glasser_moment](const Point& p) {
                   return times(glasser_moment(p), kSqrtPi / sv(sf::gamma(0.5 * p.get("mu"))));
               },
               strip, grid});
        b.add({"MOMENT-3-" + c.tag, "MOMENT", anchor + " (third formula)",
               "int u^(mu-1) G{x f(x); u} du, " + ftext, "(1/2) B(mu/2, 1/2 - mu/2) int x^mu f(x) dx", "",
               TolClass::smooth, glasser_moment,
               [moment](const Point& p) {
                   const double mu = p.get("mu");
                   return exact(0.5 * sv(sf::beta(0.5 * mu, 0.5 - 0.5 * mu)) * moment(mu));
               },
               strip, grid});
    }
}

// Corollary 2 of Theorem 1 and its three remarks (nu = 0, -1/2, 1/2), f = exp(-x^2).
void hankel_k(Builder& b) {
    const Function1D f = corpus::make("gauss");
    const std::string ftext = ", f = exp(-x^2)";

    // H_nu{u^(nu+1/2) G{x f; u}; z}
    auto hankel_side = [f](double nu, double z) {
        auto g = inner_glasser_xf(f);
        const Function1D h = Function1D::make([g, nu](double u) { return std::pow(u, nu + 0.5) * g(u); },
                                              Algebraic{0.5 - nu}, Singularity::power(-(nu + 0.5)));
        return from(T::hankel(nu, h, z, kOsc), g);
    };
    // K_(nu+1/2){x^(nu+1) f; z}
    auto k_side = [f](double nu, double z) {
        return from(T::k_transform(nu + 0.5, T::times_power(f, nu + 1.0), z, kSmooth));
    };

    auto strip = [](const Point& p) { return p.get("nu") >= -0.95 && p.get("nu") <= 0.45; };
    const std::vector<Point> grid = product({{"nu", kNus}, {"z", kZs}}, strip);
    const std::string anchor = "Corollary 2 of Theorem 1: \"denote the Hankel transform and\"";
    const std::string lhs = "L2{y^(2nu-1) L2{f; 1/(2y)}; z}";
    const std::string note = "strip -1 < nu < 1/2; default nu grid {-0.5, 0, 0.5} restricted to it";

    b.add({"KHG-1", "KHG", anchor + " (first formula)", lhs + ftext,
           "2^(-nu-1/2) z^(-nu-1) K_(nu+1/2){x^(nu+1) f(x); z}", note, TolClass::smooth,
           [f](const Point& p) { return remark_lhs(f, 2.0 * p.get("nu") - 1.0, p.get("z")); },
           [k_side](const Point& p) {
               const double nu = p.get("nu"), z = p.get("z");
               return times(k_side(nu, z), std::pow(2.0, -nu - 0.5) * std::pow(z, -nu - 1.0));
           },
           strip, grid});
    b.add({"KHG-2", "KHG", anchor + " (second formula)", lhs + ftext,
           "sqrt(pi)/2^(nu+1) z^(-nu-1/2) H_nu{u^(nu+1/2) G{x f(x); u}; z}", note, TolClass::oscillatory,
           [f](const Point& p) { return remark_lhs(f, 2.0 * p.get("nu") - 1.0, p.get("z")); },
           [hankel_side](const Point& p) {
               const double nu = p.get("nu"), z = p.get("z");
               return times(hankel_side(nu, z), kSqrtPi / std::pow(2.0, nu + 1.0) * std::pow(z, -nu - 0.5));
           },
           strip, grid});
    b.add({"KHG-3", "KHG", anchor + " (third formula)", "K_(nu+1/2){x^(nu+1) f(x); z}" + ftext,
           "sqrt(pi z/2) H_nu{u^(nu+1/2) G{x f(x); u}; z}", note, TolClass::oscillatory,
           [k_side](const Point& p) { return k_side(p.get("nu"), p.get("z")); },
           [hankel_side](const Point& p) {
               const double nu = p.get("nu"), z = p.get("z");
               return times(hankel_side(nu, z), std::sqrt(0.5 * kPi * z));
           },
           strip, grid});

    const std::vector<Point> zgrid = product({{"z", kZs}}, always);
    auto gx = [f] { return inner_glasser_xf(f); };

    // nu = 0
    {
        const std::string anchor0 = "Remark 1 of Theorem 1 (nu = 0)";
        auto h0 = [f, gx](double z) {
            auto g = gx();
            const Function1D h = Function1D::make([g](double u) { return std::sqrt(u) * g(u); }, Algebraic{0.5});
            return from(T::hankel(0.0, h, z, kOsc), g);
        };
        auto lap = [f](double z) { return from(T::laplace(T::times_power(f, 1.0), z, kSmooth)); };
        b.add({"REM-NU0-1", "REM-NU0", anchor0 + " (first formula)", "L2{(1/y) L2{f; 1/(2y)}; z}" + ftext,
               "sqrt(pi)/(2z) L{x f(x); z}", "", TolClass::smooth,
               [f](const Point& p) { return remark_lhs(f, -1.0, p.get("z")); },
               [lap](const Point& p) { return times(lap(p.get("z")), 0.5 * kSqrtPi / p.get("z")); }, always, zgrid});
        b.add({"REM-NU0-2", "REM-NU0", anchor0 + " (second formula)", "L2{(1/y) L2{f; 1/(2y)}; z}" + ftext,
               "(1/2) sqrt(pi/z) H_0{sqrt(u) G{x f(x); u}; z}", "", TolClass::oscillatory,
               [f](const Point& p) { return remark_lhs(f, -1.0, p.get("z")); },
               [h0](const Point& p) { return times(h0(p.get("z")), 0.5 * std::sqrt(kPi / p.get("z"))); }, always,
               zgrid});
        b.add({"REM-NU0-3", "REM-NU0", anchor0 + " (third formula)", "L{x f(x); z}" + ftext,
               "sqrt(z) H_0{sqrt(u) G{x f(x); u}; z}", "", TolClass::oscillatory,
               [lap](const Point& p) { return lap(p.get("z")); },
               [h0](const Point& p) { return times(h0(p.get("z")), std::sqrt(p.get("z"))); }, always, zgrid});
    }
    // nu = -1/2
    {
        const std::string anchor = "Remark 2 of Theorem 1 (nu = -1/2)";
        auto fc = [gx](double z) {
            auto g = gx();
            const Function1D h = Function1D::make([g](double u) { return g(u); }, Algebraic{1.0});
            return from(T::fourier_cos(h, z, kOsc), g);
        };
        auto k0 = [f](double z) { return from(T::k_transform(0.0, T::times_power(f, 0.5), z, kSmooth)); };
        b.add({"REM-NUMH-1", "REM-NUMH", anchor + " (first formula)", "L2{(1/y^2) L2{f; 1/(2y)}; z}" + ftext,
               "z^(-1/2) K_0{x^(1/2) f(x); z}", "", TolClass::smooth,
               [f](const Point& p) { return remark_lhs(f, -2.0, p.get("z")); },
               [k0](const Point& p) { return times(k0(p.get("z")), 1.0 / std::sqrt(p.get("z"))); }, always, zgrid});
        b.add({"REM-NUMH-2", "REM-NUMH", anchor + " (second formula)", "L2{(1/y^2) L2{f; 1/(2y)}; z}" + ftext,
               "F_C{G{x f(x); u}; z}", "", TolClass::oscillatory,
               [f](const Point& p) { return remark_lhs(f, -2.0, p.get("z")); },
               [fc](const Point& p) { return fc(p.get("z")); }, always, zgrid});
        b.add({"REM-NUMH-3", "REM-NUMH", anchor + " (third formula)", "K_0{x^(1/2) f(x); z}" + ftext,
               "sqrt(z) F_C{G{x f(x); u}; z}", "", TolClass::oscillatory,
               [k0](const Point& p) { return k0(p.get("z")); },
               [fc](const Point& p) { return times(fc(p.get("z")), std::sqrt(p.get("z"))); }, always, zgrid});
    }
    // nu = +1/2
    {
        const std::string anchor = "Remark 3 of Theorem 1 (nu = 1/2)";
        const std::string note =
            "nu = 1/2 sits on the strip boundary: u G{x f; u} tends to a nonzero constant, so the sine "
            "transform is taken in the Abel sense (zero-partition partial sums accelerated by Wynn epsilon)";
        auto fs = [gx](double z) {
            auto g = gx();
            const Function1D h = Function1D::make([g](double u) { return u * g(u); }, Algebraic{0.0});
            return from(T::fourier_sin(h, z, kOsc), g);
        };
        auto k1 = [f](double z) { return from(T::k_transform(1.0, T::times_power(f, 1.5), z, kSmooth)); };
        b.add({"REM-NUPH-1", "REM-NUPH", anchor + " (first formula)", "L2{L2{f; 1/(2y)}; z}" + ftext,
               "1/(2 z^(3/2)) K_1{x^(3/2) f(x); z}", note, TolClass::smooth,
               [f](const Point& p) { return remark_lhs(f, 0.0, p.get("z")); },
               [k1](const Point& p) { return times(k1(p.get("z")), 0.5 * std::pow(p.get("z"), -1.5)); }, always,
               zgrid});
        b.add({"REM-NUPH-2", "REM-NUPH", anchor + " (second formula)", "L2{L2{f; 1/(2y)}; z}" + ftext,
               "1/(2z) F_S{u G{x f(x); u}; z}", note, TolClass::oscillatory,
               [f](const Point& p) { return remark_lhs(f, 0.0, p.get("z")); },
               [fs](const Point& p) { return times(fs(p.get("z")), 0.5 / p.get("z")); }, always, zgrid});
        b.add({"REM-NUPH-3", "REM-NUPH", anchor + " (third formula)", "K_1{x^(3/2) f(x); z}" + ftext,
               "sqrt(z) F_S{u G{x f(x); u}; z}", note, TolClass::oscillatory,
               [k1](const Point& p) { return k1(p.get("z")); },
               [fs](const Point& p) { return times(fs(p.get("z")), std::sqrt(p.get("z"))); }, always, zgrid});
    }
}

void ik_hankel(Builder& b) {
    const Function1D f = corpus::make("gauss");
    const std::string ftext = ", f = exp(-x^2)";
    const std::string note =
        "I-argument taken as +z^2/(8y^2): with the negative argument the weight is complex for non-integer "
        "nu/2 and the identity fails for nu = 0";
    const std::string anchor = "Corollary 3 of Theorem 1: \"is analogous to the previous Corollary\"";
    const std::string weighted = "int (1/y) exp(-z^2/(8y^2)) I_(nu/2)(z^2/(8y^2)) L2{f; y} dy";
    const std::string ik = "int x f(x) I_(nu/2)(z x/2) K_(nu/2)(z x/2) dx";
    const std::string hk = "z^(-1/2) H_nu{u^(-1/2) G{x f(x); u}; z}";

    auto weighted_side = [f](double nu, double z) {
        auto lf = inner_l2(f);
        const Function1D h = Function1D::make(
            [lf, nu, z](double y) {
                const double a = z * z / (8.0 * y * y);
                return sv(sf::bessel_i_scaled(0.5 * nu, a)) / y * lf(y);
            },
            Algebraic{3.0 + nu});
        return from(quad::integrate_semi_infinite(h, kSmooth), lf);
    };
    auto ik_side = [f](double nu, double z) {
        const Function1D h = Function1D::make(
            [f, nu, z](double x) {
                const double t = 0.5 * z * x;
                return x * f(x) * sv(sf::bessel_i_scaled(0.5 * nu, t)) * sv(sf::bessel_k_scaled(0.5 * nu, t));
            },
            f.decay);
        return from(quad::integrate_semi_infinite(h, kSmooth));
    };
    auto hankel_side = [f](double nu, double z) {
        auto g = inner_glasser_xf(f);
        const Function1D h =
            Function1D::make([g](double u) { return g(u) / std::sqrt(u); }, Algebraic{1.5}, Singularity::power(0.5));
        return times(from(T::hankel(nu, h, z, kOsc), g), 1.0 / std::sqrt(z));
    };

    auto strip = [](const Point& p) { return p.get("nu") >= -0.95; };
    const std::vector<Point> grid = product({{"nu", kNus}, {"z", kZs}}, strip);
    b.add({"IK-HANKEL-1", "IK-HANKEL", anchor + " (first formula)", weighted + ftext, ik, note, TolClass::smooth,
           [weighted_side](const Point& p) { return weighted_side(p.get("nu"), p.get("z")); },
           [ik_side](const Point& p) { return ik_side(p.get("nu"), p.get("z")); }, strip, grid});
    b.add({"IK-HANKEL-2", "IK-HANKEL", anchor + " (second formula)", weighted + ftext, hk, note,
           TolClass::oscillatory, [weighted_side](const Point& p) { return weighted_side(p.get("nu"), p.get("z")); },
           [hankel_side](const Point& p) { return hankel_side(p.get("nu"), p.get("z")); }, strip, grid});
    b.add({"IK-HANKEL-3", "IK-HANKEL", anchor + " (third formula)", ik + ftext, hk, note, TolClass::oscillatory,
           [ik_side](const Point& p) { return ik_side(p.get("nu"), p.get("z")); },
           [hankel_side](const Point& p) { return hankel_side(p.get("nu"), p.get("z")); }, strip, grid});
}

void e21_widder(Builder& b) {
    const Function1D f = corpus::make("gauss");
    b.add({"E21-WIDDER", "E21-WIDDER", "Corollary 4 of Theorem 1", "E21{(1/y) L2{f; y}; z}, f = exp(-x^2)",
           "sqrt(pi) P{G{x f(x); u}; z}", "", TolClass::smooth,
           [f](const Point& p) {
               auto lf = inner_l2(f);
               const Function1D h =
                   Function1D::make([lf](double y) { return lf(y) / y; }, Algebraic{3.0}, Singularity::power(1.0));
               return from(T::e21_transform(h, p.get("z"), kSmooth), lf);
           },
           [f](const Point& p) {
               auto g = inner_glasser_xf(f);
               const Function1D h = Function1D::make([g](double u) { return g(u); }, Algebraic{1.0});
               return times(from(T::widder(h, p.get("z"), kSmooth), g), kSqrtPi);
           },
           always, product({{"z", kZs}}, always)});
}

void example1(Builder& b) {
    auto domain = [](const Point& p) {
        const double y = p.get("y"), z = p.get("z");
        return y > 0.0 && z > 0.0 && y / z <= 0.9 + 1e-12;
    };
    std::vector<Point> grid = product({{"y", kYs}, {"z", kZs}}, domain);
    for (const Point& extra : {Point{{"y", 1.0}, {"z", 4.0}}, Point{{"y", 0.9}, {"z", 1.0}}}) grid.push_back(extra);

    // sqrt(pi) arccos(y/z) / sqrt(z^2 - y^2)
    auto rhs_sq = [](const Point& p) {
        const double y = p.get("y"), z = p.get("z");
        return exact(kSqrtPi * std::acos(y / z) / std::sqrt(z * z - y * y));
    };
    // sqrt(pi) (pi - 2 arcsin(sqrt(y/z))) / sqrt(z - y)
    auto rhs_lin = [](const Point& p) {
        const double y = p.get("y"), z = p.get("z");
        return exact(2.0 * kSqrtPi * std::acos(std::sqrt(y / z)) / std::sqrt(z - y));
    };
    const std::string anchor = "Example 1: \"Suppose that |z|>|y|\"";
    const std::string halved =
        "right-hand side carries sqrt(pi)/2, not sqrt(pi): the latter is off by exactly 2 against direct "
        "quadrature and against the L2/Laplace relation applied to the second formula";
    const std::string sq_text = "(sqrt(pi)/2) (pi - 2 arcsin(y/z)) / sqrt(z^2 - y^2)";
    const std::string lin_text = "sqrt(pi) (pi - 2 arcsin(sqrt(y/z))) / sqrt(z - y)";

    b.add({"EX1-A", "EX1", anchor + " (first formula)", "L2{(1/u) exp(z^2 u^2) E1(z^2 u^2); y}", sq_text, halved,
           TolClass::near_singular,
           [](const Point& p) {
               const double z = p.get("z");
               const Function1D h = Function1D::make(
                   [z](double u) { return sv(sf::expint_e1_scaled(z * z * u * u)) / u; }, Algebraic{3.0},
                   Singularity{1.0, true}, 1.0 / z);
               return from(T::l2(h, p.get("y"), kSmooth));
           },
           rhs_sq, domain, grid});
    b.add({"EX1-B", "EX1", anchor + " (second formula)", "L{u^(-1/2) exp(z u) E1(z u); y}", lin_text, "",
           TolClass::near_singular,
           [](const Point& p) {
               const double z = p.get("z");
               const Function1D h =
                   Function1D::make([z](double u) { return sv(sf::expint_e1_scaled(z * u)) / std::sqrt(u); },
                                    Algebraic{1.5}, Singularity{0.5, true}, 1.0 / z);
               return from(T::laplace(h, p.get("y"), kSmooth));
           },
           rhs_lin, domain, grid});
    b.add({"EX1-C", "EX1", anchor + " (third formula)", "E21{(1/u) exp(-y^2 u^2); z}", sq_text, halved,
           TolClass::near_singular,
           [](const Point& p) {
               const double y = p.get("y");
               const Function1D h = Function1D::make([y](double u) { return std::exp(-y * y * u * u) / u; },
                                                     Gaussian{y * y}, Singularity::power(1.0), 1.0 / y);
               return from(T::e21_transform(h, p.get("z"), kSmooth));
           },
           rhs_sq, domain, grid});
    b.add({"EX1-D", "EX1", anchor + " (fourth formula)", "E1{u^(-1/2) exp(-y u); z}", lin_text, "",
           TolClass::near_singular,
           [](const Point& p) {
               const double y = p.get("y");
               const Function1D h = Function1D::make([y](double u) { return std::exp(-y * u) / std::sqrt(u); },
                                                     Exponential{y}, Singularity::power(0.5), 1.0 / y);
               return from(T::e1_transform(h, p.get("z"), kSmooth));
           },
           rhs_lin, domain, grid});
}

void example2(Builder& b) {
    const std::vector<Point> grid = product({{"z", {1.0, 2.0}}, {"y", {0.5, 1.0}}}, always);
    b.add({"EX2-DAW", "EX2-DAW", "Example 2, Dawson form: \"denotes the modified Bessel function\"",
           "L2{u^-2 daw(z/(2u)); y}", "(pi^(3/2)/4) [I0(z y) - L0(z y)]",
           "the imaginary-argument error-function form is equivalent through daw(x) = -i sqrt(pi)/2 "
           "exp(-x^2) Erf(i x) and is not evaluated separately",
           TolClass::smooth,
           [](const Point& p) {
               const double z = p.get("z");
               const Function1D h =
                   Function1D::make([z](double u) { return sv(sf::dawson(0.5 * z / u)) / (u * u); }, Algebraic{3.0},
                                    Singularity::power(1.0), z);
               return from(T::l2(h, p.get("y"), kSmooth));
           },
           [](const Point& p) {
               return exact(0.25 * kPi * kSqrtPi * sv(sf::i0_minus_l0(p.get("z") * p.get("y"))));
           },
           always, grid});
    b.add({"REM-E2", "REM-E2", "Remark to Example 2: \"we can restate the formulas\"",
           "L{u^-1 daw(sqrt(a/u)); y}, a = z^2/4", "(pi^(3/2)/2) [I0(2 sqrt(a y)) - L0(2 sqrt(a y))]",
           "constant is pi^(3/2)/2: the L2/Laplace relation applied to the Dawson form of Example 2 gives it, "
           "and a bare pi disagrees with direct quadrature",
           TolClass::smooth,
           [](const Point& p) {
               const double z = p.get("z"), a = 0.25 * z * z;
               const Function1D h = Function1D::make([a](double u) { return sv(sf::dawson(std::sqrt(a / u))) / u; },
                                                     Algebraic{1.5}, Singularity::power(0.5), a);
               return from(T::laplace(h, p.get("y"), kSmooth));
           },
           [](const Point& p) {
               const double a = 0.25 * p.get("z") * p.get("z");
               return exact(0.5 * kPi * kSqrtPi * sv(sf::i0_minus_l0(2.0 * std::sqrt(a * p.get("y")))));
           },
           always, grid});
}

void example3(Builder& b) {
    auto strip = [](const Point& p) {
        const double mu = p.get("mu"), nu = p.get("nu");
        return mu >= std::max(0.0, -2.0 * nu) + 0.05 && mu <= 0.95 && p.get("z") > 0.0;
    };
    const std::vector<Point> grid = product({{"mu", {0.25, 0.5}}, {"nu", {0.25, 0.5}}, {"z", {1.0, 2.0}}}, strip);
    auto ratio = [](double mu, double nu, double z) {
        return sv(sf::gamma(nu + 0.5 * mu)) / (kSqrtPi * std::pow(z, mu) * sv(sf::gamma(nu - 0.5 * mu + 1.0)));
    };
    const std::string anchor = "Example 3: \"Suppose that Re(z)>0 and\"";
    b.add({"EX3-A", "EX3", anchor + " (first formula)", "int y^(-mu-1) exp(-z^2/(2y^2)) I_nu(z^2/(2y^2)) dy",
           "Gamma(1/2-mu/2) Gamma(nu+mu/2) / (2 sqrt(pi) z^mu Gamma(nu-mu/2+1))", "", TolClass::smooth,
           [](const Point& p) {
               const double mu = p.get("mu"), nu = p.get("nu"), z = p.get("z");
               const Function1D h = Function1D::make(
                   [mu, nu, z](double y) {
                       const double t = 0.5 * z * z / (y * y);
                       // y^(-mu-1) overflows first; fold in e^-t I(t) ~ 1/sqrt(2 pi t)
                       if (t > 1e8) return std::pow(y, -mu) / (z * kSqrtPi) * (1.0 - (4.0 * nu * nu - 1.0) / (8.0 * t));
                       return std::pow(y, -mu - 1.0) * sv(sf::bessel_i_scaled(nu, t));
                   },
                   Algebraic{1.0 + mu + 2.0 * nu}, Singularity::power(mu), z);
               return from(quad::integrate_semi_infinite(h, kSmooth));
           },
           [ratio](const Point& p) {
               const double mu = p.get("mu");
               return exact(0.5 * sv(sf::gamma(0.5 - 0.5 * mu)) * ratio(mu, p.get("nu"), p.get("z")));
           },
           strip, grid});
    b.add({"EX3-B", "EX3", anchor + " (second formula)", "int y^(mu-1) I_nu(z y) K_nu(z y) dy",
           "Gamma(mu/2) Gamma(1/2-mu/2) Gamma(nu+mu/2) / (4 sqrt(pi) z^mu Gamma(nu-mu/2+1))",
           "integration variable of the integrand power read as y", TolClass::smooth,
           [](const Point& p) {
               const double mu = p.get("mu"), nu = p.get("nu"), z = p.get("z");
               const Function1D h = Function1D::make(
                   [mu, nu, z](double y) {
                       const double t = z * y;
                       return std::pow(y, mu - 1.0) * sv(sf::bessel_i_scaled(nu, t)) * sv(sf::bessel_k_scaled(nu, t));
                   },
                   Algebraic{2.0 - mu}, Singularity::power(1.0 - mu), 1.0 / z);
               return from(quad::integrate_semi_infinite(h, kSmooth));
           },
           [ratio](const Point& p) {
               const double mu = p.get("mu");
               return exact(0.25 * sv(sf::gamma(0.5 * mu)) * sv(sf::gamma(0.5 - 0.5 * mu)) *
                            ratio(mu, p.get("nu"), p.get("z")));
           },
           strip, grid});
}

std::vector<IdentityRecord> build() {
    Builder b;
    lemma1(b);
    glasser_corollaries(b);
    theorem1(b);
    moments(b);
    hankel_k(b);
    ik_hankel(b);
    e21_widder(b);
    example1(b);
    example2(b);
    example3(b);
    return std::move(b.records);
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> records = build();
    return records;
}

std::vector<std::string> families() {
    std::vector<std::string> out;
    for (const auto& r : catalog())
        if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
    return out;
}

const IdentityRecord& find(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

}  // namespace itx::identities
