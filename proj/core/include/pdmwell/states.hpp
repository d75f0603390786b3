#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdmwell/model.hpp"
#include "pdmwell/quadrature.hpp"

namespace pdmwell {

/// Normalized bound state psi_n^k(x) = A_n^k sech(ax) P_n^k(tanh(ax)),
/// associated Legendre functions with Condon-Shortley phase.  Immutable
/// after construction.
class BoundState {
public:
    BoundState(QuantumNumbers q, ModelParams p);

    const QuantumNumbers& quantum() const { return q_; }
    const ModelParams& params() const { return params_; }
    double energy() const { return energy_; }
    double norm_const() const { return norm_; }
    int parity() const { return q_.parity(); }

    double psi(double x) const;
    double dpsi(double x) const;
    double density(double x) const { const double v = psi(x); return v * v; }

private:
    QuantumNumbers q_;
    ModelParams params_;
    double energy_;
    double norm_;
};

BoundState build_state(const QuantumNumbers& q, const ModelParams& p);

/// A_n^k = sqrt( a (2n+1) (n-k)! / (2 (n+k)!) ).
double normalization_constant(const QuantumNumbers& q, const ModelParams& p);

/// Momentum-space evaluator.  Every admissible state factors analytically as
/// Phi(p) = phase * modulus(p): the position form A sech^{|k|+1}(ax) Q(tanh ax)
/// reduces to powers of sech (optionally times tanh), whose transforms obey
/// S_{k+2}(u) = (u^2 + k^2) / (k (k+1)) S_k(u) above the sech / sech^2 bases,
/// so Phi is a polynomial in u = p/a times pi sech(pi u/2) (kappa even) or
/// pi u csch(pi u/2) (kappa odd), with a constant unit phase and a real
/// signed profile.  `force_numeric` switches to direct Fourier quadrature
/// (cross-check route).
struct MomentumEvaluator {
    bool analytic = false;
    std::complex<double> phase{1.0, 0.0};
    std::function<double(double)> modulus;   // analytic only
    std::function<double(double)> dmodulus;  // analytic only
    std::function<std::complex<double>(double)> eval;
    std::function<std::complex<double>(double)> deriv;  // dPhi/dp
    std::vector<double> zeros;               // momentum-space density nodes

    std::complex<double> operator()(double p) const { return eval(p); }
    double density(double p) const { return std::norm(eval(p)); }
};

MomentumEvaluator momentum_state(const BoundState& s, const QuadratureSpec& spec = {},
                                 bool force_numeric = false);

/// Interior zeros of psi (the n - |kappa| density nodes), by scan + bisection.
std::vector<double> position_nodes(const BoundState& s);

/// Closed-form row of the eigenfunction registry: the printed hyperbolic
/// position form, the momentum form consistent with it under the unitary
/// e^{-ipx} transform, and the energy.
struct TableOneEntry {
    QuantumNumbers q;
    std::string psi_text;
    std::string phi_text;
    std::string energy_text;
    std::function<double(double, const ModelParams&)> psi_closed;
    std::function<std::complex<double>(double, const ModelParams&)> phi_closed;
    std::function<double(const ModelParams&)> energy_closed;
};

const std::vector<TableOneEntry>& table_one_entries();

/// Max relative residual of the transformed-coordinate ODE
/// Theta'' + a^2 [ (delta+alpha) sech^2(ax) - kappa^2 ] Theta = 0
/// over the given samples, with analytic derivatives of the Legendre form.
/// `energy_override` replaces the eigenvalue (used to show that a wrong
/// energy fails the equation).
double residual_check(const BoundState& s, const std::vector<double>& x_samples,
                      std::optional<double> energy_override = std::nullopt);

/// One-sided evaluations of (1/sqrt(m)) dpsi/dx at x0 (left, right),
/// second-order differences with the given step.
std::pair<double, double> matching_check(const BoundState& s, double x0,
                                         double step = 1e-5);

/// Gram matrix G_{nm} = int psi_n^k psi_m^k dx for n, m = |k| .. n_max.
std::vector<std::vector<double>> orthonormality_matrix(const ModelParams& p, int n_max,
                                                       int kappa,
                                                       const QuadratureSpec& spec = {});

/// Interior sign changes of psi on (-20/a, 20/a); equals n - |kappa|.
int count_nodes(const BoundState& s, int grid_points = 40001);

}  // namespace pdmwell
