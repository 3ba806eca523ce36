#include "spd/exponents.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "spd/errors.hpp"
#include "spd/quadrature.hpp"
#include "spd/rootfind.hpp"
#include "spd/special.hpp"

namespace spd {
namespace {

using cplx = std::complex<double>;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kInf = std::numeric_limits<double>::infinity();

double tg(double a) { return boost::math::tgamma(a); }

// ---------------------------------------------------------------------------
// Per-family compensated Laplace symbols
//   J(z)  = int (e^{-z s} - 1 + z s 1{s<1}) nu(ds)   (holomorphic, Re z >= 0)
//   Jk    = k-th derivative on the real axis, k = 1, 2, 3:
//   J1    = int s (1{s<1} - e^{-lambda s}) nu(ds)
//   J2    = int s^2 e^{-lambda s} nu(ds),   J3 = -int s^3 e^{-lambda s} nu(ds)

// --- stable: nu = s x^{-1-alpha}, alpha in (1,2) ---------------------------
cplx J_stable(const StableJumps& j, cplx z) {
    if (z == 0.0) return 0.0;
    const double K = tg(2.0 - j.alpha) / (j.alpha * (j.alpha - 1.0));
    return j.scale * (K * std::pow(z, j.alpha) - z / (j.alpha - 1.0));
}

double J_stable_real(const StableJumps& j, double l, int order) {
    const double a = j.alpha;
    switch (order) {
        case 0: return l == 0.0 ? 0.0 : J_stable(j, cplx(l)).real();
        case 1: {
            const double K = tg(2.0 - a) / (a * (a - 1.0));
            return j.scale * (K * a * std::pow(l, a - 1.0) - 1.0 / (a - 1.0));
        }
        case 2: return j.scale * tg(2.0 - a) * std::pow(l, a - 2.0);
        default: return -j.scale * tg(3.0 - a) * std::pow(l, a - 3.0);
    }
}

// --- stable boundary: nu = s x^{-2} ----------------------------------------
cplx J_boundary(const StableBoundaryJumps& j, cplx z) {
    if (z == 0.0) return 0.0;
    return j.scale * (z * std::log(z) + (kEulerGamma - 1.0) * z);
}

double J_boundary_real(const StableBoundaryJumps& j, double l, int order) {
    switch (order) {
        case 0: return l == 0.0 ? 0.0 : j.scale * (l * std::log(l) + (kEulerGamma - 1.0) * l);
        case 1:
            if (l == 0.0) throw DivergentMoment("infinite tail mean: phi'(0+) = -inf");
            return j.scale * (std::log(l) + kEulerGamma);
        case 2: return j.scale / l;
        default: return -j.scale / (l * l);
    }
}

// --- tempered stable: nu = s e^{-theta x} x^{-1-alpha}, alpha in (0,2) -----
// Linear-in-z coefficients of the two compensation conventions:
//   m1  = int_1^inf x nu/s  = theta^{alpha-1} Gamma(1-alpha, theta)   (alpha > 1 path)
//   c01 = int_0^1  x nu/s  = theta^{alpha-1} gamma(1-alpha, theta)   (alpha < 1 path)
cplx J_tempered(const TemperedStableJumps& j, cplx z) {
    if (z == 0.0) return 0.0;
    const double a = j.alpha, th = j.theta;
    if (a == 1.0) {
        const double e1 = special::expint_e1(th);
        return j.scale * ((z + th) * std::log(z + th) - th * std::log(th) -
                          z * (1.0 + std::log(th)) - e1 * z);
    }
    const double gm = tg(2.0 - a) / (a * (a - 1.0));  // Gamma(-alpha)
    if (a > 1.0) {
        const double m1 = std::pow(th, a - 1.0) * special::upper_gamma(1.0 - a, th);
        return j.scale * (gm * (std::pow(z + th, a) - std::pow(th, a) -
                                a * std::pow(th, a - 1.0) * z) -
                          m1 * z);
    }
    const double c01 = std::pow(th, a - 1.0) * special::lower_gamma(1.0 - a, th);
    return j.scale * (gm * (std::pow(z + th, a) - std::pow(th, a)) + c01 * z);
}

double J_tempered_real(const TemperedStableJumps& j, double l, int order) {
    const double a = j.alpha, th = j.theta;
    switch (order) {
        case 0: return J_tempered(j, cplx(l)).real();
        case 1: {
            if (a == 1.0)
                return j.scale * (std::log1p(l / th) - special::expint_e1(th));
            const double gm = tg(2.0 - a) / (a * (a - 1.0));
            if (a > 1.0) {
                const double m1 = std::pow(th, a - 1.0) * special::upper_gamma(1.0 - a, th);
                return j.scale * (gm * a * (std::pow(l + th, a - 1.0) - std::pow(th, a - 1.0)) - m1);
            }
            const double c01 = std::pow(th, a - 1.0) * special::lower_gamma(1.0 - a, th);
            return j.scale * (gm * a * std::pow(l + th, a - 1.0) + c01);
        }
        case 2: return j.scale * tg(2.0 - a) * std::pow(l + th, a - 2.0);
        default: return -j.scale * tg(3.0 - a) * std::pow(l + th, a - 3.0);
    }
}

// --- truncated stable: nu = s x^{-1-alpha} 1{x < L}, alpha in (0,2) --------
// W(Y) = int_0^Y (e^{-y} - 1 + y) y^{-1-alpha} dy; quadrature on (0, 30] plus
// the closed-form remainder of (y - 1 + e^{-y}) y^{-1-alpha} beyond 30.
double trunc_W(double Y, double a) {
    if (!(Y > 0.0)) return 0.0;
    const double cut = std::min(Y, 30.0);
    quad::Options opt;
    opt.rel_tol = 1e-12;
    auto f = [a](double y) { return special::em1p(y) * std::pow(y, -1.0 - a); };
    double w = quad::integrate_positive_axis(f, 0.0, cut, std::min(1.0, 0.5 * cut), opt).value;
    if (Y > 30.0) {
        auto P = [a](double y) {
            return a == 1.0 ? std::log(y) + 1.0 / y
                            : std::pow(y, 1.0 - a) / (1.0 - a) + std::pow(y, -a) / a;
        };
        w += P(Y) - P(30.0);
        w += special::upper_gamma(-a, 30.0) - special::upper_gamma(-a, Y);
    }
    return w;
}

double trunc_m1L(const TruncatedStableJumps& j) {
    if (j.cutoff <= 1.0) return 0.0;
    return j.alpha == 1.0 ? std::log(j.cutoff)
                          : (std::pow(j.cutoff, 1.0 - j.alpha) - 1.0) / (1.0 - j.alpha);
}

double J_truncated_real(const TruncatedStableJumps& j, double l, int order) {
    const double a = j.alpha, L = j.cutoff;
    switch (order) {
        case 0:
            if (l == 0.0) return 0.0;
            return j.scale * (std::pow(l, a) * trunc_W(l * L, a) - trunc_m1L(j) * l);
        case 1: {
            if (l == 0.0) return -j.scale * trunc_m1L(j);
            const double w = trunc_W(l * L, a);
            return j.scale * (a * std::pow(l, a - 1.0) * w +
                              std::pow(L, -a) * special::em1p(l * L) / l - trunc_m1L(j));
        }
        case 2:
            if (l == 0.0) return j.scale * std::pow(L, 2.0 - a) / (2.0 - a);
            return j.scale * std::pow(l, a - 2.0) * special::lower_gamma(2.0 - a, l * L);
        default:
            if (l == 0.0) return -j.scale * std::pow(L, 3.0 - a) / (3.0 - a);
            return -j.scale * std::pow(l, a - 3.0) * special::lower_gamma(3.0 - a, l * L);
    }
}

// Adaptive complex quadrature pre-split so each chunk holds a bounded number
// of oscillations of e^{-i Im(z) x}.
template <class F>
cplx chunked_complex(F&& f, double a, double b, double osc_freq, const quad::Options& opt) {
    const double width = b - a;
    std::size_t n = 1;
    if (osc_freq > 0.0) {
        const double per_chunk = 8.0 * 3.14159265358979323846 / osc_freq;  // ~4 periods
        n = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(width / per_chunk)), 1, 512);
    }
    quad::Options sub = opt;
    sub.rel_tol = std::max(opt.rel_tol * 0.5, 1e-14);
    quad::KahanSum<cplx> total;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = a + width * static_cast<double>(i) / static_cast<double>(n);
        const double hi = a + width * static_cast<double>(i + 1) / static_cast<double>(n);
        total.add(quad::integrate(f, lo, hi, sub).value);
    }
    return total.sum;
}

cplx J_truncated(const TruncatedStableJumps& j, cplx z) {
    if (z == 0.0) return 0.0;
    if (z.imag() == 0.0 && z.real() >= 0.0)
        return J_truncated_real(j, z.real(), 0);
    const double a = j.alpha, L = j.cutoff;
    auto f = [a, z](double x) -> cplx {
        const cplx u = z * x;
        if (std::abs(u) < 1e-8)  // em1p(u) ~ u^2/2, tames x^{-1-alpha}
            return 0.5 * z * z * std::pow(x, 1.0 - a);
        return special::em1p(u) * std::pow(x, -1.0 - a);
    };
    quad::Options opt;
    opt.rel_tol = 1e-12;
    const cplx ic = chunked_complex(f, 0.0, L, std::abs(z.imag()), opt);
    return j.scale * (ic - trunc_m1L(j) * z);
}

// --- custom densities -------------------------------------------------------
double custom_tail_mass(const CustomJumps& j, double u) {
    if (j.tail) return j.tail(u);
    quad::Options opt;
    auto f = [&j](double x) { return j.density(x); };
    return quad::integrate_positive_axis(f, u, kInf, 2.0 * u, opt).value;
}

double J_custom_real(const CustomJumps& j, double l, int order) {
    if (!j.density) throw SchemaError("custom jump component lacks a density");
    quad::Options opt;
    opt.rel_tol = 1e-11;
    switch (order) {
        case 0: {
            if (l == 0.0) return 0.0;
            auto near = [&](double x) { return special::em1p(l * x) * j.density(x); };
            auto far = [&](double x) { return std::expm1(-l * x) * j.density(x); };
            const double A = quad::integrate_positive_axis(near, 0.0, 1.0, 0.5, opt).value;
            const double B = quad::integrate_positive_axis(far, 1.0, kInf, 2.0, opt).value;
            return A + B;
        }
        case 1: {
            if (l == 0.0 && j.decay == TailDecay::polynomial && j.decay_index <= 1.0)
                throw DivergentMoment("infinite tail mean: phi'(0+) = -inf");
            auto near = [&](double x) { return x * (-std::expm1(-l * x)) * j.density(x); };
            auto far = [&](double x) { return x * std::exp(-l * x) * j.density(x); };
            const double A = quad::integrate_positive_axis(near, 0.0, 1.0, 0.5, opt).value;
            const double B = quad::integrate_positive_axis(far, 1.0, kInf, 2.0, opt).value;
            return A - B;
        }
        case 2: {
            if (l == 0.0 && j.decay == TailDecay::polynomial && j.decay_index <= 2.0)
                throw DivergentMoment("second weighted moment diverges at lambda = 0");
            auto f = [&](double x) { return x * x * std::exp(-l * x) * j.density(x); };
            return quad::integrate_positive_axis(f, 0.0, kInf, 1.0, opt).value;
        }
        default: {
            if (l == 0.0 && j.decay == TailDecay::polynomial && j.decay_index <= 3.0)
                throw DivergentMoment("third weighted moment diverges at lambda = 0");
            auto f = [&](double x) { return x * x * x * std::exp(-l * x) * j.density(x); };
            return -quad::integrate_positive_axis(f, 0.0, kInf, 1.0, opt).value;
        }
    }
}

cplx J_custom(const CustomJumps& j, cplx z) {
    if (!j.density) throw SchemaError("custom jump component lacks a density");
    if (z == 0.0) return 0.0;
    if (z.imag() == 0.0) return J_custom_real(j, z.real(), 0);
    if (z.imag() < 0.0) return std::conj(J_custom(j, std::conj(z)));

    const double w = z.real(), xi = z.imag();
    quad::Options opt;
    opt.rel_tol = 1e-11;
    if (w > 0.0) {
        auto near = [&](double x) -> cplx {
            const cplx u = z * x;
            return (std::abs(u) < 1e-8 ? 0.5 * u * u : cplx(special::em1p(u))) * j.density(x);
        };
        const cplx A = chunked_complex(near, 0.0, 1.0, xi, opt);
        // int_1^T e^{-zx} nu - nu((1,inf)); e^{-wx} makes T finite.
        const double T = 1.0 + 45.0 / w;
        auto far = [&](double x) -> cplx { return std::exp(-z * x) * j.density(x); };
        const cplx B = chunked_complex(far, 1.0, T, xi, opt) - cplx(custom_tail_mass(j, 1.0));
        return A + B;
    }
    // Purely imaginary argument: cos/sin split with oscillatory-tail summation.
    auto re_near = [&](double x) {
        const double u = xi * x;
        const double c = -2.0 * std::pow(std::sin(0.5 * u), 2);  // cos(u) - 1
        return c * j.density(x);
    };
    auto im_near = [&](double x) {
        const double u = xi * x;
        double v;  // u - sin(u), stable for small u
        if (std::abs(u) < 1e-4) {
            const double u2 = u * u;
            v = u * u2 / 6.0 * (1.0 - u2 / 20.0);
        } else {
            v = u - std::sin(u);
        }
        return v * j.density(x);
    };
    auto dens = [&](double x) { return j.density(x); };
    const double re0 = chunked_complex(re_near, 0.0, 1.0, xi, opt).real();
    const double im0 = chunked_complex(im_near, 0.0, 1.0, xi, opt).real();
    const double re_tail =
        quad::integrate_oscillatory_tail(dens, 1.0, xi, quad::Trig::cos, opt).value -
        custom_tail_mass(j, 1.0);
    const double im_tail = -quad::integrate_oscillatory_tail(dens, 1.0, xi, quad::Trig::sin, opt).value;
    return cplx(re0 + re_tail, im0 + im_tail);
}

cplx component_J(const AtomicJumps& c, cplx z) {
    return std::visit(
        [z](const auto& j) -> cplx {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>) return J_stable(j, z);
            else if constexpr (std::is_same_v<T, StableBoundaryJumps>) return J_boundary(j, z);
            else if constexpr (std::is_same_v<T, TemperedStableJumps>) return J_tempered(j, z);
            else if constexpr (std::is_same_v<T, TruncatedStableJumps>) return J_truncated(j, z);
            else return J_custom(j, z);
        },
        c);
}

double component_J_real(const AtomicJumps& c, double l, int order) {
    return std::visit(
        [l, order](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>) return J_stable_real(j, l, order);
            else if constexpr (std::is_same_v<T, StableBoundaryJumps>) return J_boundary_real(j, l, order);
            else if constexpr (std::is_same_v<T, TemperedStableJumps>) return J_tempered_real(j, l, order);
            else if constexpr (std::is_same_v<T, TruncatedStableJumps>) return J_truncated_real(j, l, order);
            else return J_custom_real(j, l, order);
        },
        c);
}

}  // namespace

// ---------------------------------------------------------------------------

double ExponentSuite::j_real(double lambda, int order) const {
    double s = 0.0;
    for (const auto& c : model_.jumps.components) s += component_J_real(c, lambda, order);
    return s;
}

double ExponentSuite::phi(double lambda, int order) const {
    if (!(lambda >= 0.0)) throw RangeError("phi requires lambda >= 0");
    if (order < 0 || order > 3) throw RangeError("phi supports orders 0..3");
    switch (order) {
        case 0: return model_.sigma * model_.sigma * lambda * lambda - model_.b * lambda +
                       j_real(lambda, 0);
        case 1: return 2.0 * model_.sigma * model_.sigma * lambda - model_.b + j_real(lambda, 1);
        case 2: return 2.0 * model_.sigma * model_.sigma + j_real(lambda, 2);
        default: return j_real(lambda, 3);
    }
}

std::complex<double> ExponentSuite::phi_complex(std::complex<double> z) const {
    if (z.real() < -1e-12 * (1.0 + std::abs(z)))
        throw RangeError("phi extends holomorphically only to Re z >= 0");
    cplx s = model_.sigma * model_.sigma * z * z - model_.b * z;
    for (const auto& c : model_.jumps.components) s += component_J(c, z);
    return s;
}

std::complex<double> ExponentSuite::char_exponent(double xi) const {
    if (xi == 0.0) return 0.0;
    cplx psi = -phi_complex(cplx(0.0, -xi));
    // Re psi >= 0 analytically; sweep quadrature dust off the boundary.
    if (psi.real() < 0.0 && psi.real() > -1e-10 * (std::abs(psi) + 1.0))
        psi = cplx(0.0, psi.imag());
    return psi;
}

double ExponentSuite::pruitt_K(double r) const {
    if (!(r > 0.0)) throw RangeError("pruitt_K requires r > 0");
    const double s2 = weighted_moment(model_, 2, 0.0, MomentWindow::below(r));
    return (model_.sigma * model_.sigma + s2) / (r * r);
}

double ExponentSuite::pruitt_h(double r) const {
    if (!(r > 0.0)) throw RangeError("pruitt_h requires r > 0");
    return pruitt_K(r) + jump_tail(model_, r);
}

double ExponentSuite::big_phi(double x) const {
    if (!(x > 0.0)) throw RangeError("big_phi requires x > 0");
    return x * x * phi(x, 2);
}

double ExponentSuite::big_phi_star(double r) const { return phi_star_table_->star(r); }
double ExponentSuite::big_phi_inv(double s) const { return phi_star_table_->inverse(s); }
double ExponentSuite::psi_star(double r) const { return psi_star_table_->star(r); }
double ExponentSuite::psi_inv(double s) const { return psi_star_table_->inverse(s); }

double ExponentSuite::phi_inv(double s) const {
    if (!(s > 0.0)) throw RangeError("phi_inv requires a positive level");
    // phi is strictly increasing on (theta0, inf) from 0 upward.
    double lo = theta0_;
    const double hi = expand_up([&](double l) { return phi(l) >= s; }, std::max(1.0, 2.0 * theta0_));
    if (lo == 0.0) {
        lo = std::min(1e-8, 0.5 * hi);
        while (phi(lo) > s && lo > 1e-290) lo *= 1e-2;
    }
    return find_root_increasing([&](double l) { return phi(l) - s; },
                                [&](double l) { return phi(l, 1); }, lo, hi, 0.0, 1e-13);
}

double ExponentSuite::phi_prime_inv(double y) const {
    // phi is convex, so phi' increases over all of (0, inf); its range is
    // (phi'(0+), inf) where the lower edge may be -inf (divergent drift).
    double edge = -std::numeric_limits<double>::infinity();
    try {
        edge = phi(0.0, 1);
    } catch (const NumericalError&) {
        // drift diverges at the origin: every level is attained
    }
    if (!(y > edge))
        throw OutOfRange("level is outside the range of phi' on (0, inf)");
    const double hi = expand_up([&](double l) { return phi(l, 1) >= y; }, std::max(1.0, 2.0 * theta1_));
    double lo = theta1_;
    if (lo == 0.0 || y <= 0.0) {
        lo = std::min(1e-8, 0.5 * hi);
        while (phi(lo, 1) > y && lo > 1e-290) lo *= 1e-2;
    }
    return find_root_increasing([&](double l) { return phi(l, 1) - y; },
                                [&](double l) { return phi(l, 2); }, lo, hi, 0.0, 1e-13);
}

double ExponentSuite::ladder_exponent(double lambda) const {
    if (!(lambda > 0.0)) throw RangeError("ladder exponent requires lambda > 0");
    if (std::abs(lambda - theta0_) <= 1e-10 * (1.0 + theta0_))
        throw PoleAtTheta0("lambda coincides with theta0: phi(lambda)/(lambda - theta0) is singular");
    return phi(lambda) / (lambda - theta0_);
}

double ExponentSuite::ladder_tail(double x, LadderReading reading) const {
    if (!(x > 0.0)) throw RangeError("ladder tail requires x > 0");
    quad::Options opt;
    opt.rel_tol = 1e-10;
    const double th0 = theta0_;
    auto f = [this, th0](double u) { return std::exp(-th0 * u) * jump_tail(model_, u); };
    const double integral = quad::integrate_positive_axis(f, x, kInf, 2.0 * x, opt).value;
    const double prefactor =
        reading == LadderReading::corrected ? std::exp(th0 * x) : std::exp(th0) * x;
    return prefactor * integral;
}

ScalingReport ExponentSuite::scaling_report(ScalingTarget target, double probe_lo,
                                            double probe_hi, int points_per_decade) const {
    if (!(probe_lo > 0.0) || !(probe_hi > probe_lo))
        throw RangeError("scaling probe range must satisfy 0 < lo < hi");
    ScalingReport rep;
    rep.target = target;
    rep.probe_lo = probe_lo;
    rep.probe_hi = probe_hi;

    const double shift = target == ScalingTarget::phi_dd ? 2.0 : 0.0;
    auto f = [&](double x) -> double {
        switch (target) {
            case ScalingTarget::phi: return phi(x);
            case ScalingTarget::phi_dd: return phi(x, 2);
            case ScalingTarget::re_psi: return char_exponent(x).real();
            default: return big_phi(x);
        }
    };

    const int decades_x16 = static_cast<int>(
        std::ceil(std::log10(probe_hi / probe_lo) * points_per_decade));
    const int n = std::min(std::max(3, decades_x16 + 1), 2048);
    std::vector<double> xs(static_cast<std::size_t>(n)), vs(static_cast<std::size_t>(n));
    const double llo = std::log(probe_lo), lhi = std::log(probe_hi);
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
        const double v = f(xs[static_cast<std::size_t>(i)]);
        vs[static_cast<std::size_t>(i)] = v;
        if (!(v > 0.0) || !std::isfinite(v)) degenerate = true;
    }
    if (degenerate) {
        rep.alpha_hat = rep.beta_hat = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }

    double lo_slope = kInf, hi_slope = -kInf;
    double c_hat = 1.0, C_hat = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            const auto iu = static_cast<std::size_t>(i), ku = static_cast<std::size_t>(k);
            const double dlx = std::log(xs[ku] / xs[iu]);
            const double dlv = std::log(vs[ku] / vs[iu]);
            const double slope = dlv / dlx + shift;
            lo_slope = std::min(lo_slope, slope);
            hi_slope = std::max(hi_slope, slope);
            if (model_.declared_alpha) {
                const double want = (*model_.declared_alpha - shift) * dlx;
                c_hat = std::min(c_hat, std::exp(dlv - want));
            }
            if (model_.declared_beta) {
                const double want = (*model_.declared_beta - shift) * dlx;
                C_hat = std::max(C_hat, std::exp(dlv - want));
            }
        }
    }
    rep.alpha_hat = lo_slope;
    rep.beta_hat = hi_slope;
    rep.c_hat = c_hat;
    rep.C_hat = C_hat;
    return rep;
}

ExponentSuite::ExponentSuite(LevyModel model) : model_(std::move(model)) {
    require_valid(model_);

    // theta1 = inf{s : phi'(s) > 0}; theta0 = largest root of phi.
    // phi'(0+) = -(mean at t=1); both roots are 0 iff that mean is <= 0.
    const double mean = mean_at_one(model_);
    if (mean <= 0.0) {
        theta0_ = theta1_ = 0.0;
    } else {
        // phi'(0+) < 0 (possibly -inf): positive roots exist and are unique.
        double lo = 1e-8;
        while (phi(lo, 1) >= 0.0 && lo > 1e-290) lo *= 1e-2;
        if (phi(lo, 1) >= 0.0) {
            theta1_ = 0.0;
        } else {
            const double hi = expand_up([&](double l) { return phi(l, 1) > 0.0; },
                                        std::max(1.0, 2.0 * lo));
            theta1_ = find_root_increasing([&](double l) { return phi(l, 1); },
                                           [&](double l) { return phi(l, 2); }, lo, hi,
                                           1e-12 * (1.0 + hi));
        }
        const double lo0 = std::max(theta1_, 1e-300);
        const double hi0 = expand_up([&](double l) { return phi(l) > 0.0; },
                                     std::max(1.0, 2.0 * theta1_));
        theta0_ = find_root_increasing([&](double l) { return phi(l); },
                                       [&](double l) { return phi(l, 1); }, lo0, hi0,
                                       1e-12 * (1.0 + hi0));
    }

    phi_star_table_ = std::make_unique<MonotoneEnvelope>([this](double r) { return big_phi(r); });
    psi_star_table_ =
        std::make_unique<MonotoneEnvelope>([this](double r) { return char_exponent(r).real(); });
}

}  // namespace spd
