#include "pdmwell/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pdmwell {

namespace {

// P_j^m for j = m..n (Condon-Shortley), m >= 0.
std::vector<double> legendre_column(int n, int m, double z) {
    std::vector<double> P(static_cast<std::size_t>(n - m + 1));
    double pmm = 1.0;
    const double somx2 = std::sqrt((1.0 - z) * (1.0 + z));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
        pmm *= -fact * somx2;  // (-1)^m (2m-1)!! (1-z^2)^{m/2}
        fact += 2.0;
    }
    P[0] = pmm;
    if (n > m) {
        P[1] = z * (2.0 * m + 1.0) * pmm;
        for (int j = m + 2; j <= n; ++j)
            P[j - m] = (z * (2.0 * j - 1.0) * P[j - m - 1] - (j + m - 1.0) * P[j - m - 2]) /
                       (j - m);
    }
    return P;
}

// Ratio converting order +m to -m: P_n^{-m} = (-1)^m (n-m)!/(n+m)! P_n^m.
double negative_order_factor(int n, int m) {
    double f = (m % 2 == 0) ? 1.0 : -1.0;
    for (int j = n - m + 1; j <= n + m; ++j) f /= j;
    return f;
}

}  // namespace

double assoc_legendre(int n, int k, double z) {
    return assoc_legendre_derivs(n, k, z).P;
}

LegendreEval assoc_legendre_derivs(int n, int k, double z) {
    const int m = std::abs(k);
    if (n < 0 || m > n) throw std::invalid_argument("assoc_legendre: need |k| <= n");
    if (!(z > -1.0 && z < 1.0))
        throw std::domain_error("assoc_legendre: z must lie in (-1, 1)");

    const auto P = legendre_column(n, m, z);
    auto at = [&](int j) { return (j < m) ? 0.0 : P[static_cast<std::size_t>(j - m)]; };

    const double D = 1.0 - z * z;
    auto deriv = [&](int j) {
        // (1 - z^2) dP_j/dz = (j + m) P_{j-1} - j z P_j
        return ((j + m) * at(j - 1) - j * z * at(j)) / D;
    };

    LegendreEval e;
    e.P = at(n);
    e.dP = deriv(n);
    const double dPn1 = (n - 1 >= m) ? deriv(n - 1) : 0.0;
    e.d2P = ((n + m) * dPn1 - n * at(n) - n * z * e.dP) / D + 2.0 * z * e.dP / D;

    if (k < 0) {
        const double f = negative_order_factor(n, m);
        e.P *= f;
        e.dP *= f;
        e.d2P *= f;
    }
    return e;
}

}  // namespace pdmwell
