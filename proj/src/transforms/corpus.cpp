#include "itx/corpus.hpp"
#include "itx/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itx::corpus {

using quad::Algebraic;
using quad::Exponential;
using quad::Function1D;
using quad::Gaussian;
using quad::OscillatoryKernel;
using quad::Singularity;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void positive_z(const Params& p) { require(p.z > 0.0 && std::isfinite(p.z), "corpus: z must be positive"); }

void bessel_order(const Params& p) {
    require(p.nu >= -1.0 && std::isfinite(p.nu), "corpus: nu must be >= -1");
}

// x^a J_nu(z x): J_nu ~ x^nu at the origin.
Function1D bessel_family(const Params& p, double a) {
    positive_z(p);
    bessel_order(p);
    auto env = [a](double x) { return a == 0.0 ? 1.0 : std::pow(x, a); };
    return Function1D::oscillating(OscillatoryKernel::bessel(p.nu), p.z, env, Algebraic{-a},
                                   Singularity::power(-(a + p.nu)), 1.0 / p.z);
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"one", "1", ""},
        {"pow_mu_minus_2", "x^(mu-2)", "mu"},
        {"pow_mu_minus_1", "x^(mu-1)", "mu"},
        {"exp", "exp(-x)", ""},
        {"gauss", "exp(-x^2)", ""},
        {"sin_z", "sin(z x)", "z"},
        {"cos_z", "cos(z x)", "z"},
        {"sinc_z", "sin(z x) / x", "z"},
        {"bessel_j", "J_nu(z x)", "nu,z"},
        {"bessel_j_over_x", "J_nu(z x) / x", "nu,z"},
        {"x_pow_bessel_j", "x^(nu+1) J_nu(z x)", "nu,z"},
        {"x_pow_nu_bessel_j", "x^nu J_nu(z x)", "nu,z"},
        {"inv_sq_z", "1 / (x^2 + z^2)", "z"},
        {"x_inv_sq_z", "x / (x^2 + z^2)", "z"},
    };
    return list;
}

bool exists(const std::string& name) {
    const auto& list = entries();
    return std::any_of(list.begin(), list.end(), [&](const Entry& e) { return e.name == name; });
}

Function1D make(const std::string& name, const Params& p) {
    if (name == "one") return Function1D::make([](double) { return 1.0; }, Algebraic{0.0});
    if (name == "pow_mu_minus_2" || name == "pow_mu_minus_1") {
        require(std::isfinite(p.mu), "corpus: mu must be finite");
        const double e = p.mu - (name == "pow_mu_minus_2" ? 2.0 : 1.0);
        return Function1D::make([e](double x) { return std::pow(x, e); }, Algebraic{-e}, Singularity::power(-e));
    }
    if (name == "exp") return Function1D::make([](double x) { return std::exp(-x); }, Exponential{1.0});
    if (name == "gauss") return Function1D::make([](double x) { return std::exp(-x * x); }, Gaussian{1.0});
    if (name == "sin_z" || name == "cos_z") {
        positive_z(p);
        const auto k = name == "sin_z" ? OscillatoryKernel::sine() : OscillatoryKernel::cosine();
        return Function1D::oscillating(k, p.z, [](double) { return 1.0; }, Algebraic{0.0}, {}, 1.0 / p.z);
    }
    if (name == "sinc_z") {
        positive_z(p);
        return Function1D::oscillating(OscillatoryKernel::sine(), p.z, [](double x) { return 1.0 / x; },
                                       Algebraic{1.0}, {}, 1.0 / p.z);
    }
    if (name == "bessel_j") return bessel_family(p, 0.0);
    if (name == "bessel_j_over_x") return bessel_family(p, -1.0);
    if (name == "x_pow_bessel_j") return bessel_family(p, p.nu + 1.0);
    if (name == "x_pow_nu_bessel_j") return bessel_family(p, p.nu);
    if (name == "inv_sq_z" || name == "x_inv_sq_z") {
        positive_z(p);
        const double z2 = p.z * p.z;
        if (name == "inv_sq_z")
            return Function1D::make([z2](double x) { return 1.0 / (x * x + z2); }, Algebraic{2.0}, {}, p.z);
        return Function1D::make([z2](double x) { return x / (x * x + z2); }, Algebraic{1.0}, {}, p.z);
    }
    throw std::invalid_argument("unknown corpus function '" + name + "'");
}

}  // namespace itx::corpus
