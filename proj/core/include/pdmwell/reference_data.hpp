#pragma once

#include <string>
#include <vector>

namespace pdmwell {

/// Closed-form reference value (A + B pi^2) / D.
struct PiForm {
    double A = 0.0;
    double B = 0.0;
    double D = 1.0;
    double value() const;
};

/// One published Shannon-entropy row.  `erratum` rows carry a derived value
/// (from the exact scaling S_x(a) = S_x(1) - ln a) plus a justification.
struct EntropyDatum {
    int n = 0;
    int kappa = 0;
    double a = 0.0;
    double S_x_printed = 0.0;
    double S_p_printed = 0.0;
    double sum_printed = 0.0;
    bool erratum = false;
    double S_x_derived = 0.0;  // meaningful only when erratum
    std::string note;
};

/// One published Fisher/variance row.  Individual cells can be errata.
struct FisherDatum {
    int n = 0;
    int kappa = 0;
    double a = 0.0;
    PiForm F_x, F_p, var_x, var_p;  // corrected closed forms
    bool erratum = false;           // true when any printed cell was corrected
    std::string note;
};

int reference_data_version();
const std::vector<EntropyDatum>& table_two();
const std::vector<FisherDatum>& table_three();

/// Raw embedded JSON the tables are parsed from (auditable form).
const std::string& reference_data_json();

}  // namespace pdmwell
