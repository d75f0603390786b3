#include "pdmwell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

namespace pdmwell {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Node of the sinh-sinh transform: x(t) = sinh(pi/2 sinh t),
// x'(t) = pi/2 cosh t cosh(pi/2 sinh t).
struct DENode {
    double x;
    double w;
};

inline DENode de_node(double t) {
    const double s = kHalfPi * std::sinh(t);
    if (std::abs(s) > 700.0) {
        // weight would overflow; any admissible integrand is zero out here
        return {std::copysign(std::numeric_limits<double>::infinity(), s), 0.0};
    }
    return {std::sinh(s), kHalfPi * std::cosh(t) * std::cosh(s)};
}

inline double de_term(const RealFunction& f, double t) {
    const DENode n = de_node(t);
    if (n.w == 0.0) return 0.0;
    const double v = f(n.x) * n.w;
    // f underflowing to 0 against a large abscissa can produce 0*inf
    return std::isfinite(v) ? v : 0.0;
}

using TransformedTerm = std::function<double(double)>;

// Sum one side of the trapezoid at step h, starting at index j0 and
// advancing by stride.  Truncates once several consecutive terms are
// negligible against the running scale.
double side_sum(const TransformedTerm& term, double h, int j0, int stride, double sign,
                double tiny) {
    double sum = 0.0;
    int quiet = 0;
    for (int j = j0; j < 100000; j += stride) {
        const double t = term(sign * j * h);
        sum += t;
        if (std::abs(t) < tiny * (1.0 + std::abs(sum)))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 4) break;
        if (std::abs(sign * j * h) > 4.5) break;  // transform argument already ~ 1e19
    }
    return sum;
}

// Shared trapezoid-with-level-halving skeleton for the double-exponential
// family; `term` is the transformed integrand sampled in the t variable.
QuadResult refine_trapezoid(const TransformedTerm& term, const QuadratureSpec& spec,
                            const char* what) {
    double h = 1.0;
    const double tiny = spec.abs_tol * 1e-2;
    // level 0: full trapezoid at h = 1
    double total = term(0.0) + side_sum(term, h, 1, 1, +1.0, tiny) +
                   side_sum(term, h, 1, 1, -1.0, tiny);
    double prev = h * total;
    for (int level = 1; level <= spec.max_levels; ++level) {
        h *= 0.5;
        // new nodes are the odd multiples of the refined step
        total += side_sum(term, h, 1, 2, +1.0, tiny) + side_sum(term, h, 1, 2, -1.0, tiny);
        const double cur = h * total;
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= std::max(spec.rel_tol * std::abs(cur), spec.abs_tol))
            return {cur, diff, level};
        prev = cur;
    }
    throw QuadratureError(what, prev, prev);
}

QuadResult integrate_de(const RealFunction& f, const QuadratureSpec& spec) {
    return refine_trapezoid([&f](double t) { return de_term(f, t); }, spec,
                            "integrate: double-exponential refinement did not converge");
}

// tanh-sinh rule on a finite panel [lo, hi]; endpoint singularities are
// suppressed by the double-exponential clustering of nodes.
QuadResult integrate_tanh_sinh(const RealFunction& f, double lo, double hi,
                               const QuadratureSpec& spec) {
    const double mid = 0.5 * (lo + hi);
    const double hl = 0.5 * (hi - lo);
    auto term = [&f, mid, hl](double t) {
        const double w = kHalfPi * std::sinh(t);
        if (std::abs(w) > 350.0) return 0.0;  // node collapsed onto the endpoint
        const double ch = std::cosh(w);
        const double v = f(mid + hl * std::tanh(w)) * hl * kHalfPi * std::cosh(t) / (ch * ch);
        return std::isfinite(v) ? v : 0.0;
    };
    return refine_trapezoid(term, spec,
                            "integrate: tanh-sinh refinement did not converge");
}

// exp-sinh rule on the half line starting at x0 (dir = +1 rightward, -1
// leftward); tolerates a singularity at x0 and exponential decay at infinity.
QuadResult integrate_exp_sinh(const RealFunction& f, double x0, double dir,
                              const QuadratureSpec& spec) {
    auto term = [&f, x0, dir](double t) {
        const double w = kHalfPi * std::sinh(t);
        if (std::abs(w) > 700.0) return 0.0;
        const double ew = std::exp(w);
        const double v = f(x0 + dir * ew) * kHalfPi * std::cosh(t) * ew;
        return std::isfinite(v) ? v : 0.0;
    };
    return refine_trapezoid(term, spec,
                            "integrate: exp-sinh refinement did not converge");
}

// 32-point Gauss-Legendre nodes/weights on (-1, 1), computed once by Newton
// iteration on the Legendre recurrence.
struct GaussRule {
    std::array<double, 32> x{};
    std::array<double, 32> w{};
    GaussRule() {
        const int n = 32;
        for (int i = 0; i < n / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

const GaussRule& gauss32() {
    static const GaussRule rule;
    return rule;
}

// Algebraic map u in (-1,1) -> x = u / (1 - u^2), dx = (1 + u^2)/(1 - u^2)^2 du.
QuadResult integrate_mapped_gauss(const RealFunction& f, const QuadratureSpec& spec) {
    const GaussRule& g = gauss32();
    auto mapped = [&f](double u) {
        const double d = 1.0 - u * u;
        const double x = u / d;
        const double jac = (1.0 + u * u) / (d * d);
        const double v = f(x) * jac;
        return std::isfinite(v) ? v : 0.0;
    };
    auto panels_sum = [&](int panels) {
        double sum = 0.0;
        const double w = 2.0 / panels;
        for (int k = 0; k < panels; ++k) {
            const double lo = -1.0 + k * w;
            for (int i = 0; i < 32; ++i)
                sum += g.w[i] * mapped(lo + 0.5 * w * (g.x[i] + 1.0)) * 0.5 * w;
        }
        return sum;
    };
    int panels = 4;
    double prev = panels_sum(panels);
    for (int level = 1; level <= spec.max_levels; ++level) {
        panels *= 2;
        const double cur = panels_sum(panels);
        const double diff = std::abs(cur - prev);
        if (diff <= std::max(spec.rel_tol * std::abs(cur), spec.abs_tol))
            return {cur, diff, level};
        prev = cur;
    }
    throw QuadratureError("integrate: mapped-Gauss refinement did not converge", prev, prev);
}

}  // namespace

QuadResult integrate(const RealFunction& f, const QuadratureSpec& spec) {
    spec.validate();
    return spec.method == QuadMethod::DoubleExponential ? integrate_de(f, spec)
                                                        : integrate_mapped_gauss(f, spec);
}

QuadResult integrate_split(const RealFunction& f, std::vector<double> breakpoints,
                           const QuadratureSpec& spec) {
    spec.validate();
    if (breakpoints.empty()) return integrate(f, spec);
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> pts;
    for (double b : breakpoints)
        if (pts.empty() || b - pts.back() > 1e-12 * (1.0 + std::abs(b))) pts.push_back(b);

    QuadResult out;
    auto accumulate = [&out](const QuadResult& r) {
        out.value += r.value;
        out.error += r.error;
        out.levels = std::max(out.levels, r.levels);
    };
    accumulate(integrate_exp_sinh(f, pts.front(), -1.0, spec));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        accumulate(integrate_tanh_sinh(f, pts[i], pts[i + 1], spec));
    accumulate(integrate_exp_sinh(f, pts.back(), +1.0, spec));
    return out;
}

std::complex<double> fourier_point(const RealFunction& psi, double p,
                                   const QuadratureSpec& spec) {
    const double re = integrate([&](double x) { return psi(x) * std::cos(p * x); }, spec).value;
    const double im = -integrate([&](double x) { return psi(x) * std::sin(p * x); }, spec).value;
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return {norm * re, norm * im};
}

GridFunction fourier_transform(const RealFunction& psi, const std::vector<double>& p_grid,
                               const QuadratureSpec& spec, bool check_parseval) {
    GridFunction out;
    out.domain = DomainTag::Momentum;
    out.points = p_grid;
    out.values.reserve(p_grid.size());
    for (double p : p_grid) out.values.push_back(fourier_point(psi, p, spec));
    if (check_parseval) {
        // looser inner tolerance: the defect only needs ~1e-10 resolution
        QuadratureSpec inner = spec;
        inner.rel_tol = std::max(spec.rel_tol, 1e-11);
        // integrate |phi|^2 over a finite window [-P, P]: the oscillatory
        // transform cannot be sampled at the huge abscissae an infinite-range
        // rule probes, and the spectrum of a bound state decays exponentially.
        // Grow P until the edge density is negligible.
        auto spectral_density = [&](double p) {
            return std::norm(fourier_point(psi, p, inner));
        };
        double P = 4.0;
        while (P < 512.0 &&
               std::max(spectral_density(P), spectral_density(-P)) * P > 1e-16)
            P *= 2.0;
        const double total = integrate_tanh_sinh(spectral_density, -P, P, inner).value;
        out.parseval_defect = std::abs(total - 1.0);
        out.parseval_flagged = out.parseval_defect > 1e-8;
    }
    return out;
}

double moment(const RealFunction& density, int order, const QuadratureSpec& spec) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("moment: order must be 1 or 2");
    return integrate([&](double xi) { return std::pow(xi, order) * density(xi); }, spec).value;
}

void GridFunction::write_csv(std::ostream& os) const {
    os << "xi,re,im,density\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < points.size(); ++i) {
        os << points[i] << ',' << values[i].real() << ',' << values[i].imag() << ','
           << std::norm(values[i]) << '\n';
    }
}

}  // namespace pdmwell
