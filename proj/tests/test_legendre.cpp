#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pdmwell/legendre.hpp"

using namespace pdmwell;

namespace {

// closed forms with Condon-Shortley phase, used as an independent oracle
double closed_form(int n, int m, double z) {
    const double s = std::sqrt(1.0 - z * z);
    if (n == 0 && m == 0) return 1.0;
    if (n == 1 && m == 0) return z;
    if (n == 1 && m == 1) return -s;
    if (n == 2 && m == 0) return 0.5 * (3.0 * z * z - 1.0);
    if (n == 2 && m == 1) return -3.0 * z * s;
    if (n == 2 && m == 2) return 3.0 * (1.0 - z * z);
    if (n == 3 && m == 0) return 0.5 * z * (5.0 * z * z - 3.0);
    if (n == 3 && m == 1) return -1.5 * (5.0 * z * z - 1.0) * s;
    if (n == 3 && m == 2) return 15.0 * z * (1.0 - z * z);
    if (n == 3 && m == 3) return -15.0 * s * s * s;
    return 0.0;
}

}  // namespace

TEST_SUITE("legendre") {

TEST_CASE("values match closed forms on a point grid") {
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= n; ++m) {
            for (int i = 0; i < 64; ++i) {
                const double z = -0.99 + 1.98 * i / 63.0;
                CHECK(assoc_legendre(n, m, z) ==
                      doctest::Approx(closed_form(n, m, z)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("negative order relation") {
    // P_n^{-m} = (-1)^m (n-m)!/(n+m)! P_n^m
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-0.98, 0.98);
    for (int trial = 0; trial < 200; ++trial) {
        const double z = dist(rng);
        for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
            double fact = 1.0;
            for (int j = n - m + 1; j <= n + m; ++j) fact *= j;
            const double expect =
                ((m % 2 != 0) ? -1.0 : 1.0) * assoc_legendre(n, m, z) / fact;
            CHECK(assoc_legendre(n, -m, z) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("first and second derivatives against central differences") {
    const double h = 1e-5;
    for (auto [n, m] : {std::pair{2, 0}, {2, 1}, {3, 0}, {3, 2}, {3, -1}, {4, 2}}) {
        for (double z : {-0.6, -0.2, 0.1, 0.45, 0.8}) {
            const auto e = assoc_legendre_derivs(n, m, z);
            const double d1 =
                (assoc_legendre(n, m, z + h) - assoc_legendre(n, m, z - h)) / (2.0 * h);
            const double d2 = (assoc_legendre(n, m, z + h) - 2.0 * e.P +
                               assoc_legendre(n, m, z - h)) / (h * h);
            CHECK(e.dP == doctest::Approx(d1).epsilon(1e-8));
            CHECK(e.d2P == doctest::Approx(d2).epsilon(1e-4));
        }
    }
}

TEST_CASE("the Legendre differential equation is satisfied") {
    for (auto [n, m] : {std::pair{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 0}, {5, 3}}) {
        for (double z : {-0.75, -0.3, 0.2, 0.55, 0.9}) {
            const auto e = assoc_legendre_derivs(n, m, z);
            const double D = 1.0 - z * z;
            const double lhs = D * e.d2P - 2.0 * z * e.dP +
                               (n * (n + 1.0) - m * m / D) * e.P;
            CHECK(std::abs(lhs) < 1e-9 * (1.0 + std::abs(n * (n + 1.0) * e.P)));
        }
    }
}

TEST_CASE("domain and order guards") {
    CHECK_THROWS_AS(assoc_legendre(2, 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre(2, 1, -1.5), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre(1, 2, 0.5), std::invalid_argument);
}

}  // TEST_SUITE
