#pragma once

#include <complex>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdmwell {

enum class QuadMethod { DoubleExponential, MappedGauss };

struct QuadratureSpec {
    QuadMethod method = QuadMethod::DoubleExponential;
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_levels = 12;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_levels < 3)
            throw std::invalid_argument("QuadratureSpec: need rel_tol, abs_tol > 0 and max_levels >= 3");
    }
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated, from the last refinement step
    int levels = 0;
};

/// Thrown when level refinement runs out without meeting the tolerance.
/// Carries the last two refinement values for diagnosis.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double prev, double last)
        : std::runtime_error(what), previous(prev), final(last) {}
    double previous;
    double final;
};

enum class DomainTag { Position, Momentum };

/// Sampled complex amplitudes on a strictly increasing grid.
struct GridFunction {
    std::vector<double> points;
    std::vector<std::complex<double>> values;
    DomainTag domain = DomainTag::Position;
    double parseval_defect = 0.0;   // |int |Phi|^2 - 1| when produced by fourier_transform
    bool parseval_flagged = false;  // defect > 1e-8

    /// CSV rows `xi,re,im,density` at 17 significant digits.
    void write_csv(std::ostream& os) const;
};

using RealFunction = std::function<double(double)>;

/// Integrate f over the whole real line.  The default backend is the
/// double-exponential (sinh-sinh) trapezoid rule, refined by halving the
/// step until the change between levels meets the tolerance; the mapped-Gauss
/// backend maps (-inf, inf) to (-1, 1) algebraically and refines a composite
/// Gauss-Legendre rule.  Integrands must decay (exponentially or faster).
QuadResult integrate(const RealFunction& f, const QuadratureSpec& spec = {});

/// Integrate f over the real line when f is non-analytic at the given interior
/// points (e.g. rho ln rho at density zeros, where the plain trapezoid rules
/// degrade to algebraic convergence).  The line is split at the breakpoints:
/// finite panels use the tanh-sinh rule and the two tails use the exp-sinh
/// rule, both of which tolerate endpoint singularities.  An empty breakpoint
/// list falls back to integrate().
QuadResult integrate_split(const RealFunction& f, std::vector<double> breakpoints,
                           const QuadratureSpec& spec = {});

/// Unitary Fourier transform Phi(p) = (2 pi)^{-1/2} int psi(x) e^{-i p x} dx
/// evaluated by direct quadrature at each requested momentum.  When
/// `check_parseval` is set the defect |int |Phi|^2 dp - 1| is also computed
/// (by quadrature over numerically transformed values) and flagged above 1e-8.
GridFunction fourier_transform(const RealFunction& psi,
                               const std::vector<double>& p_grid,
                               const QuadratureSpec& spec = {},
                               bool check_parseval = false);

/// Single Fourier amplitude at momentum p.
std::complex<double> fourier_point(const RealFunction& psi, double p,
                                   const QuadratureSpec& spec = {});

/// int xi^order density(xi) dxi for order in {1, 2}.
double moment(const RealFunction& density, int order, const QuadratureSpec& spec = {});

/// Entropy integrand convention: 0 ln 0 := 0 at density zeros.
inline double rho_ln_rho(double rho) {
    if (!(rho > 0.0)) return 0.0;
    return rho * std::log(rho);
}

}  // namespace pdmwell
