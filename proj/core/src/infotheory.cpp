#include "pdmwell/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace pdmwell {

// rho ln rho is only C^1 at density nodes, so the entropy integrals split
// the line there (tanh-sinh panels handle the endpoint log singularity).
double shannon_position(const BoundState& s, const QuadratureSpec& spec) {
    return -integrate_split([&](double x) { return rho_ln_rho(s.density(x)); },
                            position_nodes(s), spec).value;
}

double shannon_momentum(const BoundState& s, const QuadratureSpec& spec) {
    const MomentumEvaluator phi = momentum_state(s, spec);
    return -integrate_split([&](double p) { return rho_ln_rho(phi.density(p)); },
                            phi.zeros, spec).value;
}

EntropyReport entropy_report(const BoundState& s, const QuadratureSpec& spec) {
    EntropyReport r;
    r.q = s.quantum();
    r.a = s.params().a;
    const auto sx = integrate_split([&](double x) { return rho_ln_rho(s.density(x)); },
                                    position_nodes(s), spec);
    const MomentumEvaluator phi = momentum_state(s, spec);
    const auto sp = integrate_split([&](double p) { return rho_ln_rho(phi.density(p)); },
                                    phi.zeros, spec);
    r.S_x = -sx.value;
    r.S_p = -sp.value;
    r.sum = r.S_x + r.S_p;
    r.quad_error = sx.error + sp.error;
    r.bbm_satisfied = bbm_check(r);
    return r;
}

bool bbm_check(const EntropyReport& r, double tol) {
    return r.sum >= r.bbm_bound - tol;
}

EntropySumSweep entropy_sum_invariance(const QuantumNumbers& q,
                                       const std::vector<double>& a_list,
                                       const QuadratureSpec& spec) {
    if (a_list.size() < 2)
        throw std::invalid_argument("entropy_sum_invariance: need at least 2 widths");
    EntropySumSweep sweep;
    sweep.a_values = a_list;
    for (double a : a_list) {
        ModelParams p;
        p.a = a;
        const BoundState s = build_state(q, p);
        sweep.sums.push_back(shannon_position(s, spec) + shannon_momentum(s, spec));
    }
    const auto [lo, hi] = std::minmax_element(sweep.sums.begin(), sweep.sums.end());
    sweep.spread = *hi - *lo;
    double acc = 0.0;
    for (double v : sweep.sums) acc += v;
    sweep.common = acc / sweep.sums.size();
    return sweep;
}

double fisher_position(const BoundState& s, const QuadratureSpec& spec) {
    return 4.0 * integrate([&](double x) {
                     const double d = s.dpsi(x);
                     return d * d;
                 }, spec).value;
}

double fisher_position_density_form(const BoundState& s, const QuadratureSpec& spec) {
    const double exclusion = 1e-6 / s.params().a;
    const std::vector<double> nodes = position_nodes(s);
    auto near_node = [&](double x) {
        for (double n : nodes)
            if (std::abs(x - n) < exclusion) return true;
        return false;
    };
    // split at the exclusion-window edges so each panel sees a smooth integrand
    std::vector<double> edges;
    for (double n : nodes) {
        edges.push_back(n - exclusion);
        edges.push_back(n + exclusion);
    }
    return integrate_split([&](double x) {
               if (near_node(x)) return 0.0;
               const double rho = s.density(x);
               if (!(rho > 0.0)) return 0.0;
               const double drho = 2.0 * s.psi(x) * s.dpsi(x);
               return drho * drho / rho;
           }, edges, spec).value;
}

double fisher_momentum(const BoundState& s, const QuadratureSpec& spec) {
    const MomentumEvaluator phi = momentum_state(s, spec);
    if (phi.analytic) {
        return 4.0 * integrate([&](double p) {
                         const double d = phi.dmodulus(p);
                         return d * d;
                     }, spec).value;
    }
    // globally phased states: F_p = 4 int |Phi'|^2 dp
    return 4.0 * integrate([&](double p) { return std::norm(phi.deriv(p)); }, spec).value;
}

Variances variances(const BoundState& s, const QuadratureSpec& spec) {
    Variances v;
    v.mean_x = moment([&](double x) { return s.density(x); }, 1, spec);
    const double x2 = moment([&](double x) { return s.density(x); }, 2, spec);
    const MomentumEvaluator phi = momentum_state(s, spec);
    v.mean_p = moment([&](double p) { return phi.density(p); }, 1, spec);
    const double p2 = moment([&](double p) { return phi.density(p); }, 2, spec);
    v.var_x = x2 - v.mean_x * v.mean_x;
    v.var_p = p2 - v.mean_p * v.mean_p;
    return v;
}

FisherReport fisher_report(const BoundState& s, const QuadratureSpec& spec) {
    FisherReport r;
    r.q = s.quantum();
    r.a = s.params().a;
    r.F_x = fisher_position(s, spec);
    r.F_p = fisher_momentum(s, spec);
    const Variances v = variances(s, spec);
    r.var_x = v.var_x;
    r.var_p = v.var_p;
    r.rel_x_residual = (r.F_x - 4.0 * r.var_p) / r.F_x;
    r.rel_p_residual = (r.F_p - 4.0 * r.var_x) / r.F_p;
    r.product = r.F_x * r.F_p;
    return r;
}

std::pair<double, double> fisher_variance_relations(const FisherReport& fr) {
    return {fr.rel_x_residual, fr.rel_p_residual};
}

double uncertainty_product(const FisherReport& fr, const ModelParams&) {
    return fr.product;
}

void write_entropy_csv_header(std::ostream& os) {
    os << "n,kappa,a,S_x,S_p,sum,bbm_bound,pass\n";
}

void write_entropy_csv_row(std::ostream& os, const EntropyReport& r) {
    os << std::setprecision(17) << r.q.n << ',' << r.q.kappa << ',' << r.a << ',' << r.S_x
       << ',' << r.S_p << ',' << r.sum << ',' << r.bbm_bound << ','
       << (r.bbm_satisfied ? "true" : "false") << '\n';
}

void write_fisher_csv_header(std::ostream& os) {
    os << "n,kappa,a,F_x,F_p,var_x,var_p,rel_x_residual,rel_p_residual,product\n";
}

void write_fisher_csv_row(std::ostream& os, const FisherReport& r) {
    os << std::setprecision(17) << r.q.n << ',' << r.q.kappa << ',' << r.a << ',' << r.F_x
       << ',' << r.F_p << ',' << r.var_x << ',' << r.var_p << ',' << r.rel_x_residual << ','
       << r.rel_p_residual << ',' << r.product << '\n';
}

}  // namespace pdmwell
