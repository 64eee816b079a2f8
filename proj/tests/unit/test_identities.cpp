#include "doctest.h"

#include "itx/identities.hpp"
#include "itx/report.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace id = itx::identities;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

id::Evaluation lhs_at(const std::string& rec, const id::Point& p) { return id::find(rec).lhs(p); }
id::Evaluation rhs_at(const std::string& rec, const id::Point& p) { return id::find(rec).rhs(p); }

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cat = id::catalog();
    CHECK(id::families().size() == 16);
    CHECK(cat.size() >= 24);
    std::set<std::string> ids;
    for (const auto& r : cat) {
        CAPTURE(r.id);
        CHECK(ids.insert(r.id).second);
        CHECK_FALSE(r.anchor.empty());
        CHECK_FALSE(r.grid.empty());
        for (const auto& p : r.grid) {
            CHECK(r.domain(p));
            const auto rhs = r.rhs(p);
            CHECK(std::isfinite(rhs.value));
        }
    }
    CHECK_THROWS_AS(id::find("NOPE"), std::invalid_argument);
}

TEST_CASE("closed-form right-hand sides") {
    // 2^{-1/2} B(1/2, 1/4)
    CHECK(rel(rhs_at("GL-POWER", {{"mu", 0.5}, {"y", 1.0}}).value, boost::math::beta(0.5, 0.25) / std::sqrt(2.0)) <
          1e-14);
    // Gamma(1/4)^2 Gamma(3/4) / (4 sqrt(pi) Gamma(5/4))
    const double g14 = boost::math::tgamma(0.25);
    const double want = g14 * g14 * boost::math::tgamma(0.75) / (4.0 * std::sqrt(kPi) * boost::math::tgamma(1.25));
    CHECK(rel(rhs_at("EX3-B", {{"mu", 0.5}, {"nu", 0.5}, {"z", 1.0}}).value, want) < 1e-14);
}

TEST_CASE("LEMMA1 against a direct one-dimensional reduction") {
    // L2{(1/u) L2{e^{-x^2}; u}; y} = (1/2) int e^{-u^2 y^2} / (1 + u^2) du
    boost::math::quadrature::exp_sinh<double> es;
    for (double y : {0.5, 1.0, 2.0}) {
        const double oracle = 0.5 * es.integrate([y](double u) { return std::exp(-u * u * y * y) / (1.0 + u * u); });
        const id::Point p{{"y", y}};
        CHECK(rel(lhs_at("LEMMA1-GAUSS", p).value, oracle) < 1e-6);
        CHECK(rel(rhs_at("LEMMA1-GAUSS", p).value, oracle) < 1e-6);
    }
}

TEST_CASE("GL-JNU at nu=0, z=2, y=1") {
    const id::Point p{{"nu", 0.0}, {"z", 2.0}, {"y", 1.0}};
    const double oracle = boost::math::cyl_bessel_i(0, 1.0) * boost::math::cyl_bessel_k(0, 1.0);
    CHECK(rel(rhs_at("GL-JNU", p).value, oracle) < 1e-13);
    const auto l = lhs_at("GL-JNU", p);
    CHECK(l.converged);
    CHECK(rel(l.value, oracle) < 1e-6);
}

TEST_CASE("EX1-C at y=1, z=2 against direct quadrature") {
    // int u e^{4u^2} E1(4u^2) e^{-u^2} / u du
    boost::math::quadrature::exp_sinh<double> es;
    const double oracle = es.integrate([](double u) {
        const double a = 4.0 * u * u;
        if (a < 1e-200) return (-0.5772156649015329 - std::log(4.0) - 2.0 * std::log(u)) * std::exp(-u * u);
        const double e1s = a > 600.0 ? 1.0 / a * (1.0 - 1.0 / a + 2.0 / (a * a)) : std::exp(a) * boost::math::expint(1, a);
        return e1s * std::exp(-u * u);
    });
    const id::Point p{{"y", 1.0}, {"z", 2.0}};
    CHECK(rel(lhs_at("EX1-C", p).value, oracle) < 1e-6);
    // sqrt(pi) (pi - 2 arcsin(1/2)) / (2 sqrt 3): the halved constant
    const double closed = std::sqrt(kPi) * (kPi - 2.0 * std::asin(0.5)) / (2.0 * std::sqrt(3.0));
    CHECK(rel(rhs_at("EX1-C", p).value, closed) < 1e-14);
    CHECK(rel(oracle, closed) < 1e-6);
}

TEST_CASE("EX1 closed forms as y -> 0+") {
    for (double z : {1.0, 2.0}) {
        // sqrt(pi) G{x/(x^2+z^2); 0+} = sqrt(pi) pi / (2 z)
        CHECK(rel(rhs_at("EX1-A", {{"y", 1e-3 * z}, {"z", z}}).value, std::sqrt(kPi) * kPi / (2.0 * z)) < 1e-3);
        // the square-root forms approach their limit like sqrt(y/z)
        CHECK(rel(rhs_at("EX1-B", {{"y", 1e-6 * z}, {"z", z}}).value, std::sqrt(kPi) * kPi / std::sqrt(z)) < 1e-3);
    }
}

TEST_CASE("MOMENT-3 closed form is MOMENT-1 times Gamma(mu/2)/sqrt(pi)") {
    for (const char* tag : {"GAUSS", "EXP"})
        for (double mu : {0.25, 0.5, 0.75}) {
            const id::Point p{{"mu", mu}};
            const double m1 = rhs_at(std::string("MOMENT-1-") + tag, p).value;
            const double m3 = rhs_at(std::string("MOMENT-3-") + tag, p).value;
            CHECK(rel(m3, m1 * boost::math::tgamma(0.5 * mu) / std::sqrt(kPi)) < 1e-12);
        }
}

TEST_CASE("GL-POWER scaling covariance") {
    for (double mu : {0.25, 0.75})
        for (double y : {0.5, 2.0}) {
            const id::Point p{{"mu", mu}, {"y", y}}, p1{{"mu", mu}, {"y", 1.0}};
            CHECK(rel(rhs_at("GL-POWER", p).value / rhs_at("GL-POWER", p1).value, std::pow(y, mu - 1.0)) < 1e-14);
            CHECK(rel(lhs_at("GL-POWER", p).value / lhs_at("GL-POWER", p1).value, std::pow(y, mu - 1.0)) < 2e-8);
        }
}

TEST_CASE("Theorem 1 consistency triangle") {
    for (const char* pair : {"GAUSS-EXP", "GAUSS-INVSQ", "EXP-INVSQ"}) {
        CAPTURE(pair);
        const auto r1 = id::verify(id::find(std::string("PG-1-") + pair));
        const auto r2 = id::verify(id::find(std::string("PG-2-") + pair));
        const auto r3 = id::verify(id::find(std::string("PG-3-") + pair));
        REQUIRE(r1.points.size() == 1);
        const double tol = r1.points[0].threshold + r2.points[0].threshold;
        if (r1.ok() && r2.ok()) CHECK(r3.points[0].rel_residual <= 2.0 * tol);
        CHECK(r3.ok());
    }
}

TEST_CASE("verify plumbing") {
    const auto& rec = id::find("GL-POWER");
    SUBCASE("empty grid override") {
        const auto rep = id::verify(rec, std::vector<id::Point>{});
        CHECK(rep.points.empty());
        CHECK(rep.summary.n_pass == 0);
        CHECK(rep.summary.n_fail == 0);
    }
    SUBCASE("grid outside the domain is rejected") {
        CHECK_THROWS_AS(id::verify(rec, std::vector<id::Point>{{{"mu", 1.5}, {"y", 1.0}}}), std::invalid_argument);
    }
    SUBCASE("tolerance override and profiles") {
        const auto rep = id::verify(rec, std::nullopt, 1e-20);
        CHECK(rep.summary.n_fail > 0);
        for (const auto& p : rep.points)
            if (!p.pass) CHECK_FALSE(p.reason.empty());
        CHECK(id::Profile::named("strict").threshold_scale == doctest::Approx(0.1));
        CHECK_THROWS_AS(id::Profile::named("lax"), std::invalid_argument);
    }
}

TEST_CASE("failing sides are reported, not thrown") {
    id::IdentityRecord r;
    r.id = "SYNTH";
    r.domain = [](const id::Point&) { return true; };
    r.rhs = [](const id::Point& p) { return id::Evaluation{p.get("y"), 0.0, true}; };
    r.grid = {{{"y", 1.0}}, {{"y", 2.0}}, {{"y", 3.0}}};
    r.lhs = [](const id::Point& p) -> id::Evaluation {
        const double y = p.get("y");
        if (y == 1.0) throw std::runtime_error("boom");
        if (y == 2.0) return {2.0, 1.0, false};
        return {3.0, 0.0, true};
    };
    const auto rep = id::verify(r);
    REQUIRE(rep.points.size() == 3);
    CHECK_FALSE(rep.points[0].pass);
    CHECK(rep.points[0].reason.find("boom") != std::string::npos);
    CHECK_FALSE(rep.points[1].pass);
    CHECK(rep.points[1].reason.find("converge") != std::string::npos);
    CHECK(rep.points[2].pass);
    CHECK(rep.summary.n_fail == 2);
}

TEST_CASE("pass rule switches to absolute residual for tiny rhs") {
    id::IdentityRecord r;
    r.id = "TINY";
    r.lhs = [](const id::Point&) { return id::Evaluation{1e-12, 0.0, true}; };
    r.rhs = [](const id::Point&) { return id::Evaluation{1e-11, 0.0, true}; };
    const auto pr = id::evaluate_point(r, {}, 1e-8);
    CHECK(pr.rel_residual > 0.5);
    CHECK(pr.pass);
}

TEST_CASE("reports") {
    const auto rep = id::verify_all({}, 1, {"GL-POWER", "IK-HANKEL-1"});
    const auto j = id::to_json(rep);
    CHECK(j["schema"] == id::kReportSchema);
    CHECK(j["points"].size() == rep.points.size());
    CHECK(j["notes"].size() == 1);  // IK-HANKEL carries the I-argument note
    const auto back = id::from_json(j);
    CHECK(id::to_json(back) == j);
    const std::string csv = id::to_csv(rep);
    CHECK(csv.rfind("id,point,lhs,rhs,rel_residual,pass\n", 0) == 0);
    CHECK(id::to_text(rep).find("summary:") != std::string::npos);

    id::VerificationReport bad;
    id::PointResult p;
    p.id = "X";
    p.lhs = std::numeric_limits<double>::quiet_NaN();
    bad.points.push_back(p);
    CHECK(id::to_json(bad)["points"][0]["lhs"].is_null());
}

TEST_CASE("verify_all is independent of the worker count") {
    const std::vector<std::string> ids = {"GL-JNU", "EX3-A", "MOMENT-1-GAUSS"};
    const auto a = id::to_json(id::verify_all({}, 1, ids)).dump();
    const auto b = id::to_json(id::verify_all({}, 3, ids)).dump();
    CHECK(a == b);
}

TEST_CASE("every record converges on its default grid") {
    const auto rep = id::verify_all({}, 0);
    int converged = 0;
    for (const auto& p : rep.points) converged += p.converged;
    CHECK(converged >= 0.95 * rep.points.size());
    CHECK(rep.summary.n_fail == 0);
    CHECK(rep.summary.worst_rel < 1e-6);
}
