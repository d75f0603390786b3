#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace pdmwell {

/// Physical parameters of the solitonic-mass hyperbolic well.
///
/// The mass profile is m(x) = m0 sech^2(a x) and the confining potential is
/// V(x) = V0 sinh^2(a x) + V1 cosh^2(a x).  Natural units hbar = m0 = 1 by
/// default; V0, V1 >= 0 selects the well (rather than barrier) regime.
struct ModelParams {
    double m0 = 1.0;    // asymptotic mass scale
    double a = 1.0;     // inverse-length width parameter
    double hbar = 1.0;
    double V0 = 0.0;    // sinh^2 coefficient
    double V1 = 0.0;    // cosh^2 coefficient

    void validate() const {
        if (!(m0 > 0.0)) throw std::invalid_argument("ModelParams: m0 must be > 0");
        if (!(a > 0.0)) throw std::invalid_argument("ModelParams: a must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
        if (V0 < 0.0 || V1 < 0.0)
            throw std::invalid_argument("ModelParams: V0, V1 must be >= 0 (well regime)");
    }

    std::string to_json() const;
    static ModelParams from_json(const std::string& text);
};

/// Dimensionless constants of the reduced Poschl-Teller problem.
struct DimensionlessParams {
    double alpha = 0.0;     // 2 m0 V0 / (a^2 hbar^2)
    double beta = 0.0;      // 2 m0 V1 / (a^2 hbar^2)
    double kappa_sq = 0.0;  // alpha + beta
    double energy_scale = 1.0;  // a^2 hbar^2 / (2 m0)

    /// Map an energy to the dimensionless eigenvalue delta = 2 m0 E / (a^2 hbar^2).
    double delta_of(double energy) const { return energy / energy_scale; }
};

/// (n, kappa) label of a bound state.  Admissible iff n >= 0 and |kappa| <= n.
struct QuantumNumbers {
    int n = 0;
    int kappa = 0;

    bool admissible() const { return n >= 0 && kappa <= n && -kappa <= n; }
    void require_admissible() const {
        if (!admissible())
            throw std::invalid_argument("QuantumNumbers: need n >= 0 and |kappa| <= n");
    }
    int parity() const { return ((n + kappa) % 2 == 0) ? 1 : -1; }
};

/// Which argument the hyperbolic potential takes.  The solutions and the
/// dimensionless reduction use a*x; `Bare` evaluates sinh/cosh of bare x and
/// is kept for comparison only.
enum class PotentialArgument { Scaled, Bare };

double mass_profile(double x, const ModelParams& p);

/// Mass distribution in reciprocal space; the k = 0 removable singularity is
/// replaced by its series limit below |k| < 1e-8 * a.
double mass_momentum(double k, const ModelParams& p);

/// Dispersion energy of the mass distribution, evaluated as printed with
/// 2F1(1/2,3/2;3/2;k^2/4) = (1 - k^2/4)^{-1/2}.  Throws std::domain_error
/// for |k| >= 2.
double dispersion_energy(double k, const ModelParams& p);

double potential(double x, const ModelParams& p,
                 PotentialArgument arg = PotentialArgument::Scaled);

DimensionlessParams dimensionless(const ModelParams& p);

/// E_n = a^2 hbar^2 n(n+1) / (2 m0) - V0, independent of kappa.
double energy_level(const QuantumNumbers& q, const ModelParams& p);

enum class DecayClass { Vanishing, Bounded, Divergent };

struct MassDominanceReport {
    DecayClass klass = DecayClass::Vanishing;
    std::array<double, 3> samples{};      // sech^2(ax) V(x) at x = 10/a, 20/a, 40/a
    double log_rate = 0.0;                // d ln(product) / dx estimated from the tail
    bool dominant() const { return klass == DecayClass::Vanishing; }
};

/// Classify the tail behaviour of sech^2(ax) * V(x) from sampled values
/// instead of a hardcoded asymptotic formula.
MassDominanceReport mass_dominance_check(const ModelParams& p,
                                         PotentialArgument arg = PotentialArgument::Scaled);

const char* to_string(DecayClass c);

}  // namespace pdmwell
