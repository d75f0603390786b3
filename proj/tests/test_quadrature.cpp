#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "pdmwell/quadrature.hpp"

using namespace pdmwell;

namespace {

// independent brute-force oracle: plain trapezoid on a wide fixed window
double brute_trapezoid(const RealFunction& f, double L, int n) {
    double sum = 0.5 * (f(-L) + f(L));
    const double h = 2.0 * L / (n - 1);
    for (int i = 1; i < n - 1; ++i) sum += f(-L + i * h);
    return sum * h;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("known integrals over the real line") {
    CHECK(integrate([](double x) { return 1.0 / std::pow(std::cosh(x), 2); }).value ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x * x); }).value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(integrate([](double x) {
              return x * x / std::pow(std::cosh(x), 2);
          }).value == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0)
                          .epsilon(1e-13));
}

TEST_CASE("double-exponential agrees with brute-force and mapped-Gauss backends") {
    auto f = [](double x) { return std::pow(x, 4) / std::pow(std::cosh(x), 2); };
    const double de = integrate(f).value;
    const double brute = brute_trapezoid(f, 40.0, 4000001);
    CHECK(de == doctest::Approx(brute).epsilon(1e-11));
    QuadratureSpec gauss;
    gauss.method = QuadMethod::MappedGauss;
    CHECK(integrate(f, gauss).value == doctest::Approx(de).epsilon(1e-11));
}

TEST_CASE("spec validation") {
    QuadratureSpec s;
    s.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, s), std::invalid_argument);
    s = {};
    s.max_levels = 1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("refinement reports an error estimate below the tolerance") {
    QuadratureSpec s;
    s.rel_tol = 1e-10;
    const auto r = integrate([](double x) { return std::exp(-x * x) * std::cos(x); }, s);
    // int e^{-x^2} cos x = sqrt(pi) e^{-1/4}
    CHECK(r.value ==
          doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-0.25)).epsilon(1e-9));
    CHECK(r.error <= 1e-9);
    CHECK(r.levels >= 3);
}

TEST_CASE("split integration equals plain integration for smooth integrands") {
    auto f = [](double x) { return std::exp(-x * x) * (1.0 + x + x * x); };
    const double plain = integrate(f).value;
    const double split = integrate_split(f, {-0.7, 0.3, 1.9}).value;
    CHECK(split == doctest::Approx(plain).epsilon(1e-12));
    CHECK(integrate_split(f, {}).value == doctest::Approx(plain).epsilon(1e-15));
}

TEST_CASE("split integration handles interior log-type singularities") {
    // f = t^2 ln t^2 * e^{-t^2} around t = x - 1: C^1 only at x = 1
    auto f = [](double x) {
        const double t = x - 1.0;
        const double r = t * t;
        return (r > 0.0 ? r * std::log(r) : 0.0) * std::exp(-r);
    };
    // oracle: substitute u = t, integrand even around the singular point;
    // 2 int_0^inf u^2 ln(u^2) e^{-u^2} du = sqrt(pi)/2 (psi(3/2) = 2 - gamma - 2 ln 2)
    const double expect =
        0.5 * std::sqrt(std::numbers::pi) *
        (2.0 - std::numbers::egamma - 2.0 * std::numbers::ln2);
    const double got = integrate_split(f, {1.0}).value;
    CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    // the unsplit rule stalls on this integrand rather than silently misreporting
    CHECK_THROWS_AS(integrate(f), QuadratureError);
}

TEST_CASE("quadrature error carries the last refinement values") {
    auto f = [](double x) {
        const double r = (x - 0.5) * (x - 0.5);
        return (r > 0.0 ? r * std::log(r) : 0.0) * std::exp(-r);
    };
    try {
        integrate(f);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.previous));
        CHECK(std::isfinite(e.final));
    }
}

TEST_CASE("fourier point reproduces the sech transform") {
    // (2 pi)^{-1/2} int sech(x) e^{-ipx} dx = sqrt(pi/2) sech(pi p / 2)
    for (double p : {0.0, 0.5, 2.0}) {
        const auto v = fourier_point([](double x) { return 1.0 / std::cosh(x); }, p);
        const double expect =
            std::sqrt(std::numbers::pi / 2.0) / std::cosh(std::numbers::pi * p / 2.0);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("fourier transform grid with Parseval check") {
    auto psi = [](double x) { return std::sqrt(0.5) / std::cosh(x); };  // normalized
    std::vector<double> grid;
    for (int i = -8; i <= 8; ++i) grid.push_back(0.5 * i);
    const GridFunction g = fourier_transform(psi, grid, {}, true);
    CHECK(g.domain == DomainTag::Momentum);
    CHECK(g.points.size() == g.values.size());
    CHECK(g.parseval_defect < 1e-9);
    CHECK_FALSE(g.parseval_flagged);
    std::ostringstream os;
    g.write_csv(os);
    CHECK(os.str().substr(0, 17) == "xi,re,im,density\n");
}

TEST_CASE("moments of a density") {
    auto rho = [](double x) {
        return std::exp(-(x - 0.5) * (x - 0.5)) / std::sqrt(std::numbers::pi);
    };
    CHECK(moment(rho, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(moment(rho, 2) == doctest::Approx(0.25 + 0.5).epsilon(1e-12));
    CHECK_THROWS_AS(moment(rho, 3), std::invalid_argument);
}

TEST_CASE("rho ln rho convention at zero density") {
    CHECK(rho_ln_rho(0.0) == 0.0);
    CHECK(rho_ln_rho(-1e-30) == 0.0);
    CHECK(rho_ln_rho(1.0) == 0.0);
    CHECK(rho_ln_rho(std::numbers::e) == doctest::Approx(std::numbers::e));
}

}  // TEST_SUITE
