// Acceptance gate: one line per criterion, pinned tolerances, wall-clock
// budgets checked where the criterion carries one.  Exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "pdmwell/fdsolver.hpp"
#include "pdmwell/infotheory.hpp"
#include "pdmwell/quadrature.hpp"
#include "pdmwell/reference_data.hpp"
#include "pdmwell/states.hpp"

using namespace pdmwell;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("%s criterion-%d %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<QuantumNumbers> pairs_up_to(int n_max) {
    std::vector<QuantumNumbers> v;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) v.push_back({n, k});
    return v;
}

// criterion 1: Fisher/variance table in closed pi-forms, 1e-9 relative
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const FisherDatum& d : table_three()) {
        ModelParams p;
        p.a = d.a;
        const FisherReport r = fisher_report(build_state({d.n, d.kappa}, p));
        auto rel = [](double got, double ref) { return std::abs(got - ref) / std::abs(ref); };
        worst = std::max({worst, rel(r.F_x, d.F_x.value()), rel(r.F_p, d.F_p.value()),
                          rel(r.var_x, d.var_x.value()), rel(r.var_p, d.var_p.value())});
    }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "max rel err %.3g over %zu rows, %.2fs", worst,
                  table_three().size(), dt);
    report(1, "fisher-variance-table", worst <= 1e-9 && dt < 10.0, buf);
}

// criterion 2: entropy table within 2e-3 absolute, errata vs derived values
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int errata_flagged = 0;
    bool errata_ok = true;
    for (const EntropyDatum& d : table_two()) {
        ModelParams p;
        p.a = d.a;
        const BoundState s = build_state({d.n, d.kappa}, p);
        const double sx = shannon_position(s);
        const double sp = shannon_momentum(s);
        if (d.erratum) {
            ++errata_flagged;
            if (std::abs(sx - d.S_x_derived) > 2e-3) errata_ok = false;
        } else {
            worst = std::max(worst, std::abs(sx - d.S_x_printed));
        }
        worst = std::max(worst, std::abs(sp - d.S_p_printed));
    }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max abs dev %.3g, %d errata flagged and matching derived, %.2fs", worst,
                  errata_flagged, dt);
    report(2, "entropy-table", worst <= 2e-3 && errata_flagged == 2 && errata_ok && dt < 30.0,
           buf);
}

// criterion 3: S_x + S_p invariant in a, common values match the sum column
void criterion_3() {
    const std::vector<double> widths{1.0, 2.0, 4.0, 6.0};
    const std::vector<std::pair<QuantumNumbers, double>> sums = {
        {{0, 0}, 2.1622}, {{1, 0}, 2.9572}, {{1, 1}, 2.1512}, {{2, 0}, 3.3278},
        {{2, 1}, 2.8372}, {{2, 2}, 2.1481}, {{3, 0}, 3.5820}};
    double worst_spread = 0.0, worst_common = 0.0;
    for (const QuantumNumbers& q : pairs_up_to(3)) {
        const EntropySumSweep sweep = entropy_sum_invariance(q, widths);
        worst_spread = std::max(worst_spread, sweep.spread);
        for (const auto& [qq, ref] : sums)
            if (qq.n == q.n && qq.kappa == q.kappa)
                worst_common = std::max(worst_common, std::abs(sweep.common - ref));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max spread %.3g, max |common - table| %.3g",
                  worst_spread, worst_common);
    report(3, "entropy-sum-invariance", worst_spread <= 1e-9 && worst_common <= 2e-3, buf);
}

// criterion 4: BBM bound with positive minimum slack over the grid
void criterion_4() {
    double min_slack = 1e300;
    for (const EntropyDatum& d : table_two()) {
        ModelParams p;
        p.a = d.a;
        const EntropyReport r = entropy_report(build_state({d.n, d.kappa}, p));
        min_slack = std::min(min_slack, r.sum - r.bbm_bound);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "min slack %.6f", min_slack);
    report(4, "bbm-bound", min_slack > 0.0, buf);
}

// criterion 5: Fisher-variance relations and uncertainty product
void criterion_5() {
    double worst = 0.0, min_product = 1e300;
    for (const EntropyDatum& d : table_two()) {
        ModelParams p;
        p.a = d.a;
        const FisherReport r = fisher_report(build_state({d.n, d.kappa}, p));
        worst = std::max({worst, std::abs(r.rel_x_residual), std::abs(r.rel_p_residual)});
        min_product = std::min(min_product, r.product);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max rel residual %.3g, min F_x F_p %.4f", worst,
                  min_product);
    report(5, "fisher-variance-relations", worst <= 1e-8 && min_product >= 4.0, buf);
}

// criterion 6: finite-difference spectral oracle with h^2 convergence
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    ModelParams p;  // a = 1, V = 0
    FDSpec spec;    // N = 4001, L = 12
    const SpectrumResult sr = solve(p, spec);
    const double expect[4] = {0.0, 1.0, 3.0, 6.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(sr.eigenvalues[i] - expect[i]));

    FDSpec coarse;
    coarse.N = 2001;
    coarse.n_eigen = 2;
    const double ratio = std::abs(solve(p, coarse).eigenvalues[1] - 1.0) /
                         std::abs(sr.eigenvalues[1] - 1.0);

    ModelParams pk;
    pk.V1 = 0.5;  // kappa^2 = 1: n = 0 inadmissible
    FDSpec speck;
    speck.n_eigen = 3;
    const SpectrumResult srk = solve(pk, speck);
    const double expectk[3] = {1.0, 3.0, 6.0};
    double worstk = 0.0;
    for (int i = 0; i < 3; ++i)
        worstk = std::max(worstk, std::abs(srk.eigenvalues[i] - expectk[i]));

    const double dt = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "max |dE| %.3g (free), %.3g (kappa=1), h^2 ratio %.2f, %.2fs", worst,
                  worstk, ratio, dt);
    report(6, "fd-spectrum-oracle",
           worst <= 5e-3 && worstk <= 5e-3 && ratio > 3.5 && ratio < 4.5 && dt < 20.0, buf);
}

// criterion 7: registry normalization, FT cross-check, FD overlaps
void criterion_7() {
    ModelParams p;  // a = 1
    double worst_norm = 0.0, worst_ft = 0.0;
    for (const TableOneEntry& e : table_one_entries()) {
        const BoundState s = build_state(e.q, p);
        worst_norm = std::max(
            worst_norm,
            std::abs(integrate([&](double x) { return s.density(x); }).value - 1.0));
        for (int i = 0; i <= 80; ++i) {
            const double pp = -10.0 + 20.0 * i / 80.0;
            const auto ft = fourier_point([&](double x) { return e.psi_closed(x, p); }, pp);
            worst_ft = std::max(worst_ft, std::abs(ft - e.phi_closed(pp, p)));
        }
    }
    const SpectrumResult sr = solve(p, FDSpec{});
    std::vector<BoundState> analytic;
    for (int n = 0; n < 4; ++n) analytic.push_back(build_state({n, 0}, p));
    const double min_overlap = cross_validate(sr, analytic).min_overlap;
    char buf[200];
    std::snprintf(buf, sizeof buf, "max |norm-1| %.3g, FT sup %.3g, min FD overlap %.10f",
                  worst_norm, worst_ft, min_overlap);
    report(7, "registry-function-checks",
           worst_norm <= 1e-10 && worst_ft <= 1e-8 && min_overlap >= 1.0 - 1e-5, buf);
}

// criterion 8: property suite (parity, nodes, Gram, residual, scaling)
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    bool parity_ok = true, nodes_ok = true;
    double worst_gram = 0.0, worst_res = 0.0, worst_scal = 0.0;
    ModelParams p;
    for (const QuantumNumbers& q : pairs_up_to(3)) {
        const BoundState s = build_state(q, p);
        for (int i = 0; i <= 50; ++i) {
            const double x = -4.0 + 8.0 * i / 50.0;
            if (std::abs(s.psi(-x) - q.parity() * s.psi(x)) > 1e-12) parity_ok = false;
        }
        if (count_nodes(s) != q.n - std::abs(q.kappa)) nodes_ok = false;
        std::vector<double> xs;
        for (double x = -3.0; x <= 3.0; x += 0.31) xs.push_back(x);
        worst_res = std::max(worst_res, residual_check(s, xs));

        std::vector<double> fx, fp;
        for (double a : {1.0, 2.0, 4.0, 6.0}) {
            ModelParams pa;
            pa.a = a;
            const BoundState sa = build_state(q, pa);
            fx.push_back(fisher_position(sa) / (a * a));
            fp.push_back(fisher_momentum(sa) * a * a);
        }
        auto rel_spread = [](const std::vector<double>& v) {
            double lo = v[0], hi = v[0];
            for (double x : v) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            return (hi - lo) / std::abs(v[0]);
        };
        worst_scal = std::max({worst_scal, rel_spread(fx), rel_spread(fp)});
    }
    for (int kappa : {0, 1}) {
        const auto G = orthonormality_matrix(p, 3, kappa);
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = 0; j < G.size(); ++j)
                worst_gram = std::max(worst_gram, std::abs(G[i][j] - (i == j ? 1.0 : 0.0)));
    }
    const double dt = seconds_since(t0);
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "parity %s, nodes %s, |G-I| %.3g, residual %.3g, scaling %.3g, %.2fs",
                  parity_ok ? "ok" : "BAD", nodes_ok ? "ok" : "BAD", worst_gram, worst_res,
                  worst_scal, dt);
    report(8, "property-suite",
           parity_ok && nodes_ok && worst_gram <= 1e-10 && worst_res <= 1e-10 &&
               worst_scal <= 1e-9 && dt < 60.0,
           buf);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
