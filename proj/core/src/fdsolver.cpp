#include "pdmwell/fdsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdmwell/quadrature.hpp"

namespace pdmwell {

namespace {

// Negative pivots of the LDL^T factorization of (A - lambda B); equals the
// number of pencil eigenvalues below lambda since B is positive definite.
int sturm_count(const TridiagOperators& ops, double lambda) {
    const std::size_t N = ops.diag.size();
    int count = 0;
    double q = ops.diag[0] - lambda * ops.weight[0];
    for (std::size_t i = 1; i < N; ++i) {
        if (q < 0.0) ++count;
        if (q == 0.0) q = 1e-300;
        q = (ops.diag[i] - lambda * ops.weight[i]) - ops.off[i - 1] * ops.off[i - 1] / q;
    }
    if (q < 0.0) ++count;
    return count;
}

double bisect_eigenvalue(const TridiagOperators& ops, int index, double lo, double hi) {
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(ops, mid) >= index + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 1e-13 * (1.0 + std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// Solve (A - lambda B) x = rhs; tridiagonal LU with partial pivoting
// (dgttrf-style elimination with a second superdiagonal for fill-in).
std::vector<double> shifted_solve(const TridiagOperators& ops, double lambda,
                                  std::vector<double> rhs) {
    const std::size_t N = ops.diag.size();
    std::vector<double> d(N), du(N - 1), du2(N >= 2 ? N - 2 : 0, 0.0), dl(N - 1);
    for (std::size_t i = 0; i < N; ++i) d[i] = ops.diag[i] - lambda * ops.weight[i];
    for (std::size_t i = 0; i + 1 < N; ++i) du[i] = dl[i] = ops.off[i];

    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) d[i] = 1e-300;
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            rhs[i + 1] -= fact * rhs[i];
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            du[i] = temp;
            if (i + 2 < N) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= fact * rhs[i];
        }
    }
    if (d[N - 1] == 0.0) d[N - 1] = 1e-300;

    std::vector<double> x(N);
    x[N - 1] = rhs[N - 1] / d[N - 1];
    if (N >= 2) x[N - 2] = (rhs[N - 2] - du[N - 2] * x[N - 1]) / d[N - 2];
    for (std::size_t k = N - 1; k-- >= 2;) {
        const std::size_t i = k - 1;
        double v = rhs[i] - du[i] * x[i + 1] - du2[i] * x[i + 2];
        x[i] = v / d[i];
    }
    return x;
}

double b_norm(const TridiagOperators& ops, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += ops.weight[i] * v[i] * v[i];
    return std::sqrt(s);
}

std::vector<double> apply_a(const TridiagOperators& ops, const std::vector<double>& v) {
    const std::size_t N = v.size();
    std::vector<double> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        double s = ops.diag[i] * v[i];
        if (i > 0) s += ops.off[i - 1] * v[i - 1];
        if (i + 1 < N) s += ops.off[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

std::vector<double> inverse_iteration(const TridiagOperators& ops, double lambda) {
    const std::size_t N = ops.diag.size();
    // tiny shift off the eigenvalue keeps the factorization well defined
    const double shifted = lambda + 1e-11 * (1.0 + std::abs(lambda));
    std::vector<double> v(N, 1.0);
    for (std::size_t i = 0; i < N; ++i) v[i] = 1.0 + 1e-3 * std::sin(17.0 * (i + 1.0));
    double nv = b_norm(ops, v);
    for (auto& c : v) c /= nv;
    for (int it = 0; it < 4; ++it) {
        std::vector<double> rhs(N);
        for (std::size_t i = 0; i < N; ++i) rhs[i] = ops.weight[i] * v[i];
        v = shifted_solve(ops, shifted, std::move(rhs));
        nv = b_norm(ops, v);
        if (!(nv > 0.0) || !std::isfinite(nv))
            throw std::runtime_error("fdsolver: inverse iteration broke down");
        for (auto& c : v) c /= nv;
    }
    return v;
}

}  // namespace

TridiagOperators assemble(const ModelParams& p, const FDSpec& spec) {
    p.validate();
    spec.validate(p);
    const double L = spec.half_width(p);
    const int N = spec.N;
    TridiagOperators ops;
    ops.h = 2.0 * L / (N - 1);
    const double h = ops.h;
    const double t = p.hbar * p.hbar / (2.0 * h * h);
    ops.x.resize(N);
    ops.diag.resize(N);
    ops.off.assign(N - 1, -t);
    ops.weight.resize(N);
    for (int i = 0; i < N; ++i) {
        const double x = -L + i * h;
        ops.x[i] = x;
        const double m = mass_profile(x, p);
        const double mv = m * potential(x, p);
        ops.diag[i] = 2.0 * t + mv;
        ops.weight[i] = m;
    }
    // natural boundary rows (half-cell trapezoid weights keep the pencil symmetric)
    ops.diag.front() = t + mass_profile(ops.x.front(), p) * potential(ops.x.front(), p);
    ops.diag.back() = t + mass_profile(ops.x.back(), p) * potential(ops.x.back(), p);
    ops.weight.front() *= 0.5;
    ops.weight.back() *= 0.5;
    return ops;
}

int eigenvalue_count_below(const TridiagOperators& ops, double energy) {
    return sturm_count(ops, energy);
}

SpectrumResult solve(const ModelParams& p, const FDSpec& spec) {
    const TridiagOperators ops = assemble(p, spec);
    const int N = spec.N;

    SpectrumResult sr;
    sr.grid = ops.x;
    sr.h = ops.h;

    // crude Gershgorin-style bracket for the search window
    double hi = 0.0;
    for (int i = 0; i < N; ++i) {
        const double row = std::abs(ops.diag[i]) + (i > 0 ? std::abs(ops.off[i - 1]) : 0.0) +
                           (i + 1 < N ? std::abs(ops.off[i]) : 0.0);
        hi = std::max(hi, row / ops.weight[i]);
    }
    double lo = -p.V0 - 1.0;

    const double boundary_tol = 1e-4;
    int index = 0;
    while (static_cast<int>(sr.eigenvalues.size()) < spec.n_eigen && index < spec.n_eigen + 64) {
        const double lambda = bisect_eigenvalue(ops, index, lo, hi);
        ++index;
        std::vector<double> theta = inverse_iteration(ops, lambda);

        // grid psi = sqrt(m) Theta, trapezoid-normalized
        std::vector<double> psi(N);
        double nrm = 0.0, peak = 0.0;
        for (int i = 0; i < N; ++i) {
            psi[i] = std::sqrt(mass_profile(ops.x[i], p)) * theta[i];
            const double w = (i == 0 || i == N - 1) ? 0.5 : 1.0;
            nrm += w * psi[i] * psi[i] * ops.h;
        }
        nrm = std::sqrt(nrm);
        for (auto& v : psi) v /= nrm;
        for (double v : psi) peak = std::max(peak, std::abs(v));
        if (std::max(std::abs(psi.front()), std::abs(psi.back())) > boundary_tol * peak)
            continue;  // box artifact pinned to the truncation boundary

        // relative residual against the operator scale: |Av - lambda Bv| can be
        // ~0 in both numerator and |Av| when lambda ~ 0, so normalize by
        // (|A|_inf + |lambda| |B|_inf) |v| instead
        const std::vector<double> av = apply_a(ops, theta);
        double rnum = 0.0, vnrm = 0.0, a_scale = 0.0, b_scale = 0.0;
        for (int i = 0; i < N; ++i) {
            const double r = av[i] - lambda * ops.weight[i] * theta[i];
            rnum += r * r;
            vnrm += theta[i] * theta[i];
            const double row = std::abs(ops.diag[i]) +
                               (i > 0 ? std::abs(ops.off[i - 1]) : 0.0) +
                               (i + 1 < N ? std::abs(ops.off[i]) : 0.0);
            a_scale = std::max(a_scale, row);
            b_scale = std::max(b_scale, ops.weight[i]);
        }
        const double denom = (a_scale + std::abs(lambda) * b_scale) * std::sqrt(vnrm);

        sr.eigenvalues.push_back(lambda);
        sr.eigenvectors.push_back(std::move(theta));
        sr.psi_vectors.push_back(std::move(psi));
        sr.residual_norms.push_back(denom > 0.0 ? std::sqrt(rnum) / denom : 0.0);
    }
    if (static_cast<int>(sr.eigenvalues.size()) < spec.n_eigen)
        throw std::runtime_error("fdsolver: requested eigenpairs not recovered");
    return sr;
}

CrossValidationReport cross_validate(const SpectrumResult& sr,
                                     const std::vector<BoundState>& analytic) {
    if (analytic.size() > sr.eigenvalues.size())
        throw std::invalid_argument("cross_validate: more analytic levels than FD levels");
    CrossValidationReport rep;
    const std::size_t N = sr.grid.size();
    for (std::size_t l = 0; l < analytic.size(); ++l) {
        CrossValidationRow row;
        row.level = static_cast<int>(l);
        row.E_fd = sr.eigenvalues[l];
        row.E_analytic = analytic[l].energy();
        row.abs_err = std::abs(row.E_fd - row.E_analytic);
        double ov = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double w = (i == 0 || i + 1 == N) ? 0.5 : 1.0;
            ov += w * sr.psi_vectors[l][i] * analytic[l].psi(sr.grid[i]) * sr.h;
        }
        row.overlap = std::abs(ov);
        rep.rows.push_back(row);
        rep.max_abs_err = std::max(rep.max_abs_err, row.abs_err);
        rep.min_overlap = std::min(rep.min_overlap, row.overlap);
    }
    return rep;
}

double grid_shannon_entropy(const std::vector<double>& grid, const std::vector<double>& psi) {
    double s = 0.0;
    const double h = grid[1] - grid[0];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = (i == 0 || i + 1 == grid.size()) ? 0.5 : 1.0;
        s -= w * rho_ln_rho(psi[i] * psi[i]) * h;
    }
    return s;
}

}  // namespace pdmwell
