#include "pdmwell/states.hpp"

#include <cmath>
#include <numbers>

#include "pdmwell/legendre.hpp"

namespace pdmwell {

using std::cosh;
using std::sinh;
using std::sqrt;
using std::tanh;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kCHalf = std::numbers::pi / 2.0;  // sech / csch argument scale in u = p/a

double sech(double u) { return 1.0 / cosh(u); }

// u / sinh(u), stable at u = 0.
double u_over_sinh(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + 7.0 * u2 * u2 / 360.0;
    }
    return u / sinh(u);
}

// p csch(c p), stable at p = 0.
double p_csch(double p, double c) { return u_over_sinh(c * p) / c; }

// d/du [u / sinh u], stable at u = 0.
double d_u_over_sinh(double u) {
    if (std::abs(u) < 1e-4) return -u / 3.0 + 7.0 * u * u * u / 90.0;
    const double s = sinh(u);
    return (s - u * cosh(u)) / (s * s);
}

// Ascending coefficients of the Legendre polynomial P_n(z).
std::vector<double> legendre_coeffs(int n) {
    std::vector<double> pm1{1.0};
    if (n == 0) return pm1;
    std::vector<double> cur{0.0, 1.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> nxt(k + 2, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) nxt[j + 1] += (2.0 * k + 1.0) * cur[j];
        for (std::size_t j = 0; j < pm1.size(); ++j) nxt[j] -= static_cast<double>(k) * pm1[j];
        for (double& c : nxt) c /= k + 1.0;
        pm1 = std::move(cur);
        cur = std::move(nxt);
    }
    return cur;
}

double polyval(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * u + c[j];
    return v;
}

std::vector<double> polyder(const std::vector<double>& c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = j * c[j];
    return d;
}

struct AnalyticForm {
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    std::complex<double> phase;
    std::vector<double> poly;  // profile polynomial in u = p/a
    double a = 1.0;
};

// Momentum profile conjugate to the Condon-Shortley position state, kernel
// e^{-ipx}/sqrt(2 pi), for any admissible (n, m), m = |kappa| >= 0.
//
// psi = A sech^{m+1}(ax) Q(tanh ax) with Q = (-1)^m P_n^{(m)}; the identity
// tanh^2 = 1 - sech^2 reduces psi to sums of sech^k (even Q terms) and
// sech^k tanh = -(1/(k a)) d/dx sech^k (odd terms), all with k = m+1 (mod 2).
// With S_k(u) = int sech^k(t) e^{-iut} dt the recurrence
// S_{k+2} = (u^2 + k^2)/(k(k+1)) S_k climbs from S_1 = pi sech(pi u/2) or
// S_2 = pi u csch(pi u/2), so Phi(p) = phase * C * Poly(u) * Base(u).
AnalyticForm analytic_momentum(int n, int m, const ModelParams& params) {
    const double a = params.a;
    // Q coefficients: m-th derivative of P_n, times (-1)^m (Condon-Shortley)
    std::vector<double> q = legendre_coeffs(n);
    for (int der = 0; der < m; ++der) q = polyder(q);
    if (m % 2 != 0)
        for (double& c : q) c = -c;

    // reduce to coefficients over sech powers k = m+1+2s
    std::vector<double> csech(n + 2, 0.0), dsech(n + 2, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0.0) continue;
        const int r = static_cast<int>(j) / 2;
        double binom = 1.0;  // C(r, s)
        for (int s = 0; s <= r; ++s) {
            const double coef = q[j] * binom * ((s % 2 != 0) ? -1.0 : 1.0);
            const int k = m + 1 + 2 * s;
            if (j % 2 == 0)
                csech[k] += coef;
            else
                dsech[k] += coef;
            binom = binom * (r - s) / (s + 1.0);
        }
    }

    // climb the transform recurrence, accumulating the u-polynomial
    const bool odd_state = (n - m) % 2 != 0;
    const int k0 = (m % 2 == 0) ? 1 : 2;
    std::vector<double> chain{1.0};  // S_k / Base as polynomial in u
    std::vector<double> accum;
    for (int k = k0; k <= n + 1; k += 2) {
        const double w = odd_state ? (dsech[k] != 0.0 ? dsech[k] / k : 0.0) : csech[k];
        if (w != 0.0) {
            if (accum.size() < chain.size()) accum.resize(chain.size(), 0.0);
            for (std::size_t j = 0; j < chain.size(); ++j) accum[j] += w * chain[j];
        }
        // chain *= (u^2 + k^2) / (k (k+1))
        std::vector<double> nxt(chain.size() + 2, 0.0);
        const double s = 1.0 / (k * (k + 1.0));
        for (std::size_t j = 0; j < chain.size(); ++j) {
            nxt[j] += chain[j] * k * k * s;
            nxt[j + 2] += chain[j] * s;
        }
        chain = std::move(nxt);
    }
    if (accum.empty()) accum.assign(1, 0.0);

    AnalyticForm form;
    form.a = a;
    if (odd_state) {
        // Phi carries the -i u factor from FT(d/dx sech^k)
        form.phase = -kI;
        form.poly.assign(accum.size() + 1, 0.0);
        for (std::size_t j = 0; j < accum.size(); ++j) form.poly[j + 1] = accum[j];
    } else {
        form.phase = {1.0, 0.0};
        form.poly = std::move(accum);
    }

    const double C =
        normalization_constant({n, m}, params) / (a * sqrt(2.0 * std::numbers::pi));
    const std::vector<double> poly = form.poly;
    const std::vector<double> dpoly = polyder(poly);
    if (m % 2 == 0) {
        form.phi = [=](double p) {
            const double u = p / a;
            return C * polyval(poly, u) * std::numbers::pi * sech(kCHalf * u);
        };
        form.dphi = [=](double p) {
            const double u = p / a;
            const double B = std::numbers::pi * sech(kCHalf * u);
            const double dB = -std::numbers::pi * kCHalf * sech(kCHalf * u) * tanh(kCHalf * u);
            return (C / a) * (polyval(dpoly, u) * B + polyval(poly, u) * dB);
        };
    } else {
        form.phi = [=](double p) {
            const double u = p / a;
            return C * polyval(poly, u) * 2.0 * u_over_sinh(kCHalf * u);
        };
        form.dphi = [=](double p) {
            const double u = p / a;
            const double B = 2.0 * u_over_sinh(kCHalf * u);
            const double dB = std::numbers::pi * d_u_over_sinh(kCHalf * u);
            return (C / a) * (polyval(dpoly, u) * B + polyval(poly, u) * dB);
        };
    }
    return form;
}

// Real roots of the profile polynomial (simple zeros found by sign scan +
// bisection inside the Cauchy bound), rescaled to momentum p = a u.
std::vector<double> profile_zeros(const std::vector<double>& poly, double a) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && poly[deg] == 0.0) --deg;
    if (deg <= 0) return {};
    double bound = 0.0;
    for (int j = 0; j < deg; ++j) bound = std::max(bound, std::abs(poly[j] / poly[deg]));
    const double R = 1.0 + bound;
    std::vector<double> zeros;
    const int N = 20001;
    double up = -R, vp = polyval(poly, up);
    for (int i = 1; i < N; ++i) {
        const double u = -R + 2.0 * R * i / (N - 1.0);
        const double v = polyval(poly, u);
        if (v == 0.0) {
            zeros.push_back(a * u);
        } else if (vp != 0.0 && (vp < 0.0) != (v < 0.0)) {
            double lo = up, hi = u, flo = vp;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = polyval(poly, mid);
                if (fm == 0.0 || hi - lo < 1e-15 * (1.0 + std::abs(mid))) {
                    lo = hi = mid;
                    break;
                }
                if ((flo < 0.0) != (fm < 0.0))
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(a * 0.5 * (lo + hi));
        }
        up = u;
        vp = v;
    }
    return zeros;
}

}  // namespace

BoundState::BoundState(QuantumNumbers q, ModelParams p) : q_(q), params_(p) {
    p.validate();
    q.require_admissible();
    energy_ = energy_level(q, p);
    norm_ = normalization_constant(q, p);
}

double BoundState::psi(double x) const {
    const double z = tanh(params_.a * x);
    if (std::abs(z) >= 1.0) {
        // tanh saturated while sech(ax) ~ 1e-8 is still far from underflow:
        // continue with the exact limit P_n^m(+-1) = 0 (m != 0) or (+-1)^n
        if (q_.kappa != 0) return 0.0;
        const double pn = (z > 0.0 || q_.n % 2 == 0) ? 1.0 : -1.0;
        return norm_ * sech(params_.a * x) * pn;
    }
    return norm_ * sech(params_.a * x) * assoc_legendre(q_.n, q_.kappa, z);
}

double BoundState::dpsi(double x) const {
    const double z = tanh(params_.a * x);
    if (std::abs(z) >= 1.0) {
        if (q_.kappa != 0) return 0.0;
        const double pn = (z > 0.0 || q_.n % 2 == 0) ? 1.0 : -1.0;
        return -norm_ * params_.a * sech(params_.a * x) * z * pn;
    }
    const auto e = assoc_legendre_derivs(q_.n, q_.kappa, z);
    // d/dx [sech(ax) P(tanh ax)] = a sech(ax) [ (1 - z^2) P' - z P ]
    return norm_ * params_.a * sech(params_.a * x) * ((1.0 - z * z) * e.dP - z * e.P);
}

BoundState build_state(const QuantumNumbers& q, const ModelParams& p) {
    return BoundState(q, p);
}

double normalization_constant(const QuantumNumbers& q, const ModelParams& p) {
    q.require_admissible();
    p.validate();
    const double logA2 = std::log(p.a) + std::log(2.0 * q.n + 1.0) +
                         std::lgamma(q.n - q.kappa + 1.0) - std::log(2.0) -
                         std::lgamma(q.n + q.kappa + 1.0);
    return std::exp(0.5 * logA2);
}

MomentumEvaluator momentum_state(const BoundState& s, const QuadratureSpec& spec,
                                 bool force_numeric) {
    const int n = s.quantum().n;
    const int kappa = s.quantum().kappa;
    const int m = std::abs(kappa);
    MomentumEvaluator ev;

    if (!force_numeric) {
        const AnalyticForm form = analytic_momentum(n, m, s.params());
        // psi_n^{-m} = (-1)^m psi_n^m pointwise once normalized
        const double refl = (kappa < 0 && m % 2 != 0) ? -1.0 : 1.0;
        ev.analytic = true;
        ev.phase = refl * form.phase;
        ev.modulus = form.phi;
        ev.dmodulus = form.dphi;
        ev.zeros = profile_zeros(form.poly, form.a);
        const auto phase = ev.phase;
        const auto phi = form.phi;
        const auto dphi = form.dphi;
        ev.eval = [phase, phi](double p) { return phase * phi(p); };
        ev.deriv = [phase, dphi](double p) { return phase * dphi(p); };
        return ev;
    }

    auto psi = [s](double x) { return s.psi(x); };
    ev.analytic = false;
    ev.eval = [psi, spec](double p) { return fourier_point(psi, p, spec); };
    ev.deriv = [psi, spec](double p) {
        const double re =
            -integrate([&](double x) { return x * psi(x) * std::sin(p * x); }, spec).value;
        const double im =
            -integrate([&](double x) { return x * psi(x) * std::cos(p * x); }, spec).value;
        const double norm = 1.0 / sqrt(2.0 * std::numbers::pi);
        return std::complex<double>{norm * re, norm * im};
    };
    return ev;
}

const std::vector<TableOneEntry>& table_one_entries() {
    static const std::vector<TableOneEntry> entries = [] {
        const double pi = std::numbers::pi;
        std::vector<TableOneEntry> v;
        auto energy = [](int n) {
            return [n](const ModelParams& p) {
                return energy_level({n, 0}, p);
            };
        };
        auto c_of = [pi](const ModelParams& p) { return pi / (2.0 * p.a); };

        v.push_back({{0, 0},
                     "sqrt(a/2) sech(ax)",
                     "sqrt(pi/(4a)) sech(p pi/(2a))",
                     "-V0",
                     [](double x, const ModelParams& p) {
                         return sqrt(p.a / 2.0) * sech(p.a * x);
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return sqrt(pi / (4.0 * p.a)) * sech(c_of(p) * p_);
                     },
                     energy(0)});
        v.push_back({{1, 0},
                     "sqrt(3a/2) sech(ax) tanh(ax)",
                     "-i p sqrt(3pi/(4a^3)) sech(p pi/(2a))",
                     "a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         return sqrt(3.0 * p.a / 2.0) * sech(p.a * x) * tanh(p.a * x);
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return -kI * p_ * sqrt(3.0 * pi / (4.0 * std::pow(p.a, 3))) *
                                sech(c_of(p) * p_);
                     },
                     energy(1)});
        v.push_back({{1, 1},
                     "sqrt(3a/4) sech^2(ax)",
                     "p sqrt(3pi/(8a^3)) csch(p pi/(2a))",
                     "a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         const double s = sech(p.a * x);
                         return sqrt(3.0 * p.a / 4.0) * s * s;
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return sqrt(3.0 * pi / (8.0 * std::pow(p.a, 3))) *
                                p_csch(p_, c_of(p));
                     },
                     energy(1)});
        v.push_back({{2, 0},
                     "sqrt(5a/8) [2 cosh^2(ax) - 3] sech^3(ax)",
                     "sqrt(5pi/(64a^5)) (a^2 - 3p^2) sech(p pi/(2a))",
                     "3a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         const double s = sech(p.a * x), ch = cosh(p.a * x);
                         return sqrt(5.0 * p.a / 8.0) * (2.0 * ch * ch - 3.0) * s * s * s;
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return sqrt(5.0 * pi / (64.0 * std::pow(p.a, 5))) *
                                (p.a * p.a - 3.0 * p_ * p_) * sech(c_of(p) * p_);
                     },
                     energy(2)});
        v.push_back({{2, 1},
                     "-sqrt(15a/4) sech^2(ax) tanh(ax)",
                     "i p^2 sqrt(15pi/(32a^5)) csch(p pi/(2a))",
                     "3a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         const double s = sech(p.a * x);
                         return -sqrt(15.0 * p.a / 4.0) * s * s * tanh(p.a * x);
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return kI * p_ * sqrt(15.0 * pi / (32.0 * std::pow(p.a, 5))) *
                                p_csch(p_, c_of(p));
                     },
                     energy(2)});
        v.push_back({{2, 2},
                     "-sqrt(15a/16) sech^3(ax)",
                     "-sqrt(15pi/(128a^5)) (a^2 + p^2) sech(p pi/(2a))",
                     "3a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         const double s = sech(p.a * x);
                         return -sqrt(15.0 * p.a / 16.0) * s * s * s;
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return -sqrt(15.0 * pi / (128.0 * std::pow(p.a, 5))) *
                                (p.a * p.a + p_ * p_) * sech(c_of(p) * p_);
                     },
                     energy(2)});
        v.push_back({{3, 0},
                     "sqrt(7a/8) [2 cosh^2(ax) - 5] tanh(ax) sech^3(ax)",
                     "-i p sqrt(7pi/(576a^7)) (7a^2 - 5p^2) sech(p pi/(2a))",
                     "6a^2 hbar^2/m0 - V0",
                     [](double x, const ModelParams& p) {
                         const double s = sech(p.a * x), ch = cosh(p.a * x);
                         return sqrt(7.0 * p.a / 8.0) * (2.0 * ch * ch - 5.0) *
                                tanh(p.a * x) * s * s * s;
                     },
                     [c_of, pi](double p_, const ModelParams& p) -> std::complex<double> {
                         return -kI * p_ * sqrt(7.0 * pi / (576.0 * std::pow(p.a, 7))) *
                                (7.0 * p.a * p.a - 5.0 * p_ * p_) * sech(c_of(p) * p_);
                     },
                     energy(3)});
        return v;
    }();
    return entries;
}

double residual_check(const BoundState& s, const std::vector<double>& x_samples,
                      std::optional<double> energy_override) {
    const ModelParams& p = s.params();
    const int n = s.quantum().n;
    const int kappa = s.quantum().kappa;
    const DimensionlessParams dim = dimensionless(p);
    const double delta = dim.delta_of(energy_override.value_or(s.energy()));
    const double lam = delta + dim.alpha;       // n(n+1) at the true eigenvalue
    const double ksq = kappa * kappa;           // = alpha + beta for an exact model match
    const double B = s.norm_const() / std::sqrt(p.m0);
    const double scale = p.a * p.a * B * (1.0 + lam + ksq);

    double worst = 0.0;
    for (double x : x_samples) {
        const double z = tanh(p.a * x);
        const auto e = assoc_legendre_derivs(n, kappa, z);
        const double D = 1.0 - z * z;
        const double T = D * D * e.d2P - 2.0 * z * D * e.dP + (lam * D - ksq) * e.P;
        worst = std::max(worst, std::abs(p.a * p.a * B * T) / std::abs(scale));
    }
    return worst;
}

std::pair<double, double> matching_check(const BoundState& s, double x0, double step) {
    const double h = step;
    const double left =
        (3.0 * s.psi(x0) - 4.0 * s.psi(x0 - h) + s.psi(x0 - 2.0 * h)) / (2.0 * h);
    const double right =
        (-3.0 * s.psi(x0) + 4.0 * s.psi(x0 + h) - s.psi(x0 + 2.0 * h)) / (2.0 * h);
    const double inv_sqrt_m = 1.0 / std::sqrt(mass_profile(x0, s.params()));
    return {left * inv_sqrt_m, right * inv_sqrt_m};
}

std::vector<std::vector<double>> orthonormality_matrix(const ModelParams& p, int n_max,
                                                       int kappa,
                                                       const QuadratureSpec& spec) {
    const int n_lo = std::abs(kappa);
    if (n_max < n_lo)
        throw std::invalid_argument("orthonormality_matrix: n_max < |kappa|");
    std::vector<BoundState> states;
    for (int n = n_lo; n <= n_max; ++n) states.push_back(build_state({n, kappa}, p));
    const std::size_t dim = states.size();
    std::vector<std::vector<double>> G(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const double v = integrate(
                [&](double x) { return states[i].psi(x) * states[j].psi(x); }, spec).value;
            G[i][j] = G[j][i] = v;
        }
    }
    return G;
}

std::vector<double> position_nodes(const BoundState& s) {
    const double L = 20.0 / s.params().a;
    const int N = 4001;
    std::vector<double> nodes;
    double xp = -L, vp = s.psi(xp);
    for (int i = 1; i < N; ++i) {
        const double x = -L + 2.0 * L * i / (N - 1.0);
        const double v = s.psi(x);
        if (v == 0.0 && std::abs(x) < L * 0.9) {
            nodes.push_back(x);
        } else if (vp != 0.0 && v != 0.0 && (vp < 0.0) != (v < 0.0)) {
            double lo = xp, hi = x, flo = vp;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = s.psi(mid);
                if (fm == 0.0 || hi - lo < 1e-15 * (1.0 + std::abs(mid))) {
                    lo = hi = mid;
                    break;
                }
                if ((flo < 0.0) != (fm < 0.0))
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        xp = x;
        vp = v;
    }
    return nodes;
}

int count_nodes(const BoundState& s, int grid_points) {
    const double L = 20.0 / s.params().a;
    int changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < grid_points; ++i) {
        const double x = -L + 2.0 * L * i / (grid_points - 1.0);
        const double v = s.psi(x);
        if (v == 0.0) continue;  // exact node on the grid; sign change counted across it
        if (have_prev && ((prev < 0.0) != (v < 0.0))) ++changes;
        prev = v;
        have_prev = true;
    }
    return changes;
}

}  // namespace pdmwell
