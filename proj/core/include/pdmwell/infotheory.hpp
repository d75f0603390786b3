#pragma once

#include <ostream>
#include <vector>

#include "pdmwell/model.hpp"
#include "pdmwell/quadrature.hpp"
#include "pdmwell/states.hpp"

namespace pdmwell {

/// Beckner-Bialynicki-Birula-Mycielski bound for D = 1, in nats.
inline constexpr double kBbmBoundD1 = 1.0 + 1.1447298858494001741;  // 1 + ln(pi)

struct EntropyReport {
    QuantumNumbers q;
    double a = 0.0;
    double S_x = 0.0;
    double S_p = 0.0;
    double sum = 0.0;
    double bbm_bound = kBbmBoundD1;
    bool bbm_satisfied = false;
    double quad_error = 0.0;
};

struct FisherReport {
    QuantumNumbers q;
    double a = 0.0;
    double F_x = 0.0;
    double F_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double rel_x_residual = 0.0;  // (F_x - 4 var_p) / F_x
    double rel_p_residual = 0.0;  // (F_p - 4 var_x) / F_p
    double product = 0.0;         // F_x * F_p
};

double shannon_position(const BoundState& s, const QuadratureSpec& spec = {});
double shannon_momentum(const BoundState& s, const QuadratureSpec& spec = {});

EntropyReport entropy_report(const BoundState& s, const QuadratureSpec& spec = {});

bool bbm_check(const EntropyReport& r, double tol = 1e-9);

struct EntropySumSweep {
    std::vector<double> a_values;
    std::vector<double> sums;  // S_x + S_p per width
    double spread = 0.0;       // max - min
    double common = 0.0;       // mean
};

EntropySumSweep entropy_sum_invariance(const QuantumNumbers& q,
                                       const std::vector<double>& a_list,
                                       const QuadratureSpec& spec = {});

/// F_x = 4 int (psi')^2 dx, the finite-at-nodes identity form for real states.
double fisher_position(const BoundState& s, const QuadratureSpec& spec = {});

/// Density form int (rho')^2 / rho dx, excluding node neighbourhoods of
/// radius 1e-6/a; cross-check route for fisher_position.
double fisher_position_density_form(const BoundState& s, const QuadratureSpec& spec = {});

double fisher_momentum(const BoundState& s, const QuadratureSpec& spec = {});

struct Variances {
    double var_x = 0.0;
    double var_p = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
};

Variances variances(const BoundState& s, const QuadratureSpec& spec = {});

FisherReport fisher_report(const BoundState& s, const QuadratureSpec& spec = {});

/// (F_x - 4 sigma_p^2, F_p - 4 sigma_x^2), relative to the Fisher values.
std::pair<double, double> fisher_variance_relations(const FisherReport& fr);

/// F_x * F_p, to be compared against 4 hbar^2.
double uncertainty_product(const FisherReport& fr, const ModelParams& p);

void write_entropy_csv_header(std::ostream& os);
void write_entropy_csv_row(std::ostream& os, const EntropyReport& r);
void write_fisher_csv_header(std::ostream& os);
void write_fisher_csv_row(std::ostream& os, const FisherReport& r);

}  // namespace pdmwell
