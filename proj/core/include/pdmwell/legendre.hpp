#pragma once

namespace pdmwell {

/// Value and first two z-derivatives of the associated Legendre function
/// P_n^k(z) on (-1, 1), Condon-Shortley phase, integer order k (any sign,
/// |k| <= n).  Evaluated by the standard forward recurrence in degree; the
/// derivatives come from the recurrence identities, not from the defining ODE.
struct LegendreEval {
    double P = 0.0;
    double dP = 0.0;
    double d2P = 0.0;
};

double assoc_legendre(int n, int k, double z);

LegendreEval assoc_legendre_derivs(int n, int k, double z);

}  // namespace pdmwell
