#include "pdmwell/model.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace pdmwell {

namespace {
double sech(double u) { return 1.0 / std::cosh(u); }
}

std::string ModelParams::to_json() const {
    nlohmann::json j{{"m0", m0}, {"a", a}, {"hbar", hbar}, {"V0", V0}, {"V1", V1}};
    return j.dump();
}

ModelParams ModelParams::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ModelParams p;
    p.m0 = j.value("m0", 1.0);
    p.a = j.value("a", 1.0);
    p.hbar = j.value("hbar", 1.0);
    p.V0 = j.value("V0", 0.0);
    p.V1 = j.value("V1", 0.0);
    p.validate();
    return p;
}

double mass_profile(double x, const ModelParams& p) {
    const double s = sech(p.a * x);
    return p.m0 * s * s;
}

double mass_momentum(double k, const ModelParams& p) {
    const double c = std::numbers::pi / (2.0 * p.a);
    if (std::abs(k) < 1e-8 * p.a) {
        // series limit of k csch(ck) -> 1/c
        return std::sqrt(2.0 / std::numbers::pi) * p.m0 / p.a;
    }
    return std::sqrt(std::numbers::pi / 2.0) * p.m0 * k / (p.a * p.a) / std::sinh(c * k);
}

double dispersion_energy(double k, const ModelParams& p) {
    if (std::abs(k) >= 2.0)
        throw std::domain_error("dispersion_energy: |k| >= 2 is outside the 2F1 branch");
    const double pref = std::sqrt(2.0 / std::numbers::pi) * p.a * p.a * p.hbar * p.hbar / p.m0;
    // 2F1(1/2, 3/2; 3/2; k^2/4) = (1 - k^2/4)^{-1/2}
    const double hyp = 1.0 / std::sqrt(1.0 - 0.25 * k * k);
    return pref * (k * k * hyp - std::cosh(k));
}

double potential(double x, const ModelParams& p, PotentialArgument arg) {
    const double u = (arg == PotentialArgument::Scaled) ? p.a * x : x;
    const double sh = std::sinh(u), ch = std::cosh(u);
    return p.V0 * sh * sh + p.V1 * ch * ch;
}

DimensionlessParams dimensionless(const ModelParams& p) {
    p.validate();
    DimensionlessParams d;
    const double denom = p.a * p.a * p.hbar * p.hbar;
    d.alpha = 2.0 * p.m0 * p.V0 / denom;
    d.beta = 2.0 * p.m0 * p.V1 / denom;
    d.kappa_sq = d.alpha + d.beta;
    d.energy_scale = denom / (2.0 * p.m0);
    return d;
}

double energy_level(const QuantumNumbers& q, const ModelParams& p) {
    q.require_admissible();
    const double n = q.n;
    return p.a * p.a * p.hbar * p.hbar * n * (n + 1.0) / (2.0 * p.m0) - p.V0;
}

MassDominanceReport mass_dominance_check(const ModelParams& p, PotentialArgument arg) {
    MassDominanceReport r;
    const std::array<double, 3> xs{10.0 / p.a, 20.0 / p.a, 40.0 / p.a};
    for (std::size_t i = 0; i < 3; ++i) {
        const double s = sech(p.a * xs[i]);
        r.samples[i] = s * s * potential(xs[i], p, arg);
    }
    const double f1 = r.samples[0], f2 = r.samples[1], f3 = r.samples[2];
    const double scale = p.V0 + p.V1;
    if (f2 > 0.0 && f3 > 0.0)
        r.log_rate = std::log(f3 / f2) / (xs[2] - xs[1]);
    if (f3 <= 1e-10 * (scale + 1.0)) {
        r.klass = DecayClass::Vanishing;
    } else if (f3 >= 10.0 * f2 && f2 >= 10.0 * f1) {
        r.klass = DecayClass::Divergent;
    } else {
        r.klass = DecayClass::Bounded;
    }
    return r;
}

const char* to_string(DecayClass c) {
    switch (c) {
        case DecayClass::Vanishing: return "vanishing";
        case DecayClass::Bounded: return "bounded";
        case DecayClass::Divergent: return "divergent";
    }
    return "?";
}

}  // namespace pdmwell
