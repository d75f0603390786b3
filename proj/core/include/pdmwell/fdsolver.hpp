#pragma once

#include <vector>

#include "pdmwell/model.hpp"
#include "pdmwell/states.hpp"

namespace pdmwell {

struct FDSpec {
    double L = 0.0;       // half-domain; 0 means "use 12/a"
    int N = 4001;         // grid points, odd
    int n_eigen = 4;

    double half_width(const ModelParams& p) const { return L > 0.0 ? L : 12.0 / p.a; }
    void validate(const ModelParams& p) const {
        if (N < 101 || N % 2 == 0)
            throw std::invalid_argument("FDSpec: N must be odd and >= 101");
        if (half_width(p) * p.a < 8.0)
            throw std::invalid_argument("FDSpec: L*a must be >= 8 (boundary density)");
        if (n_eigen < 1) throw std::invalid_argument("FDSpec: n_eigen must be >= 1");
    }
};

/// Generalized tridiagonal pencil A v = E B v in the transformed coordinate
/// Theta = psi / sqrt(m): A = -(hbar^2/2) D2 + m V (symmetric tridiagonal),
/// B = diag(m) > 0.  Natural (Neumann) rows at the ends; the kappa = 0
/// eigenfunctions tend to constants, so a Dirichlet truncation would poison
/// the low spectrum at any affordable L.
struct TridiagOperators {
    std::vector<double> x;     // grid
    std::vector<double> diag;  // A diagonal
    std::vector<double> off;   // A off-diagonal (size N-1)
    std::vector<double> weight;  // B diagonal
    double h = 0.0;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors;  // Theta_i on the grid
    std::vector<std::vector<double>> psi_vectors;   // sqrt(m) Theta_i, grid-normalized
    std::vector<double> residual_norms;             // ||A v - E B v|| / ||A v||
    std::vector<double> grid;
    double h = 0.0;
};

TridiagOperators assemble(const ModelParams& p, const FDSpec& spec);

/// Lowest n_eigen eigenpairs by Sturm-count bisection on the pencil
/// (A - lambda B) plus inverse iteration.  States whose grid psi has
/// boundary amplitude above 1e-4 of its maximum (box artifacts) are
/// dropped and replaced by the next level up.
SpectrumResult solve(const ModelParams& p, const FDSpec& spec);

/// Number of pencil eigenvalues strictly below `energy` (Sturm count).
int eigenvalue_count_below(const TridiagOperators& ops, double energy);

struct CrossValidationRow {
    int level = 0;
    double E_fd = 0.0;
    double E_analytic = 0.0;
    double abs_err = 0.0;
    double overlap = 0.0;  // |<psi_fd, psi_analytic>| on the grid
};

struct CrossValidationReport {
    std::vector<CrossValidationRow> rows;
    double max_abs_err = 0.0;
    double min_overlap = 1.0;
};

CrossValidationReport cross_validate(const SpectrumResult& sr,
                                     const std::vector<BoundState>& analytic);

/// Shannon position entropy recomputed from a grid density by trapezoid rule.
double grid_shannon_entropy(const std::vector<double>& grid,
                            const std::vector<double>& psi);

}  // namespace pdmwell
