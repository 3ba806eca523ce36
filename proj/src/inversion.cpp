#include "spd/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "spd/errors.hpp"
#include "spd/quadrature.hpp"
#include "spd/saddlepoint.hpp"
#include "spd/special.hpp"

namespace spd {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
// Panels are sized so the oscillatory phase advances at most this many
// radians per panel; 32-point Gauss-Legendre then resolves each panel to
// machine precision with a wide margin.
constexpr double kMaxPhasePerPanel = 12.0;

struct MarchOut {
    double real_part = 0.0;   // Re of the integral over (0, edge)
    double l1 = 0.0;          // accumulated |panel| mass (conditioning gauge)
    double err = 0.0;         // truncation bound + refinement residuals + roundoff
    std::size_t nodes = 0;
    double edge = 0.0;
};

struct Panel {
    cplx value{};
    double l1 = 0.0;  // sum of |weight * integrand|: the panel's own mass
};

// Marches Gauss-Legendre panels along the vertical line Re z = w, integrating
//   exp{ t (phi(w + iu) - phi(w)) + i u x }   over u in (0, inf).
// Normalizing by phi(w) keeps the integrand O(1) at u = 0, so the caller can
// reattach exp{t phi(w) + w x} in log space and never overflows mid-sum.
class ContourMarch {
public:
    // cdf = true divides the integrand by z, turning the density inversion
    // into the distribution-function inversion (contour must then avoid the
    // pole: w > 0).
    ContourMarch(const ExponentSuite& suite, double t, double x, double w,
                 const OracleConfig& cfg, bool cdf = false)
        : suite_(suite), t_(t), x_(x), w_(w), cfg_(cfg), cdf_(cdf),
          phi_w_(suite.phi_complex(cplx(w, 0.0))) {}

    // t * phi(w) from the same complex evaluation path the march uses, so the
    // normalization cancels exactly instead of to rounding.
    double t_phi_w() const { return t_ * phi_w_.real(); }

    MarchOut run();

private:
    cplx exponent(double u) const {
        return t_ * (suite_.phi_complex(cplx(w_, u)) - phi_w_) + cplx(0.0, u * x_);
    }
    cplx integrand(double u) {
        nodes_ += 1;
        if (nodes_ > cfg_.max_nodes)
            throw NoConvergence("contour inversion: node budget exhausted at u = " +
                                std::to_string(u));
        const cplx value = std::exp(exponent(u));
        return cdf_ ? value / cplx(w_, u) : value;
    }

    Panel gl32(double a, double b);
    Panel refined_panel(double a, double b, int depth, double parent_diff,
                        double* residual, double* noise);

    double initial_width() const;
    double truncation_bound(double edge, double g_edge);

    // Magnitude of the terms combined inside exponent(u): the achievable
    // absolute accuracy of the exponent is a few ulp of this scale, and the
    // integrand inherits it as a relative error.
    double exponent_scale(double u) const {
        return std::abs(t_ * phi_w_) + std::fabs(u * x_) + 1.0;
    }

    const ExponentSuite& suite_;
    double t_, x_, w_;
    OracleConfig cfg_;
    bool cdf_ = false;
    cplx phi_w_;
    std::size_t nodes_ = 0;
};

Panel ContourMarch::gl32(double a, double b) {
    const auto& rule = quad::gauss_legendre_32();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cplx acc{};
    double l1 = 0.0;
    for (const auto& [node, weight] : rule) {
        const cplx v = weight * integrand(mid + half * node);
        acc += v;
        l1 += std::abs(v);
    }
    return {half * acc, half * l1};
}

// One panel, dyadically split until two estimates agree (the width heuristic
// makes splitting rare; it is the safety net, not the workhorse).  Agreement
// is judged against a noise floor scaled to the exponent magnitude, because
// on far contours t*phi(w) is large and its rounding puts an irreducible
// relative jitter on every integrand value.  A discrepancy that fails to
// shrink under one split is that jitter (genuine Gauss-Legendre error
// collapses by orders of magnitude per halving), so the panel is accepted and
// the discrepancy charged to *residual either way.
Panel ContourMarch::refined_panel(double a, double b, int depth, double parent_diff,
                                  double* residual, double* noise) {
    const Panel whole = gl32(a, b);
    const double mid = 0.5 * (a + b);
    const Panel lo = gl32(a, mid);
    const Panel hi = gl32(mid, b);
    const Panel halves{lo.value + hi.value, lo.l1 + hi.l1};
    const double diff = std::abs(whole.value - halves.value);
    if (!std::isfinite(diff))
        throw NumericalError("contour inversion: integrand not finite near u = " +
                             std::to_string(mid));
    const cplx e_mid = exponent(mid);
    nodes_ += 1;
    const double scale = std::abs(e_mid) + 2.0 * exponent_scale(mid);
    const double floor = 1e-15 * scale * halves.l1;
    const bool converged = diff <= 1e-14 * std::abs(halves.value) + floor + 1e-300;
    const bool plateau = diff >= 0.25 * parent_diff;
    if (converged || plateau || depth <= 0 || !(a < mid && mid < b)) {
        *residual += diff;
        *noise += 4e-16 * scale * halves.l1;
        return halves;
    }
    const Panel left = refined_panel(a, mid, depth - 1, diff, residual, noise);
    const Panel right = refined_panel(mid, b, depth - 1, diff, residual, noise);
    return {left.value + right.value, left.l1 + right.l1};
}

double ContourMarch::initial_width() const {
    // Decay scale of |integrand|: curvature at the contour foot when w > 0,
    // otherwise the localization scale Phi^{-1}(1/t).
    double h0 = 0.0;
    if (w_ > 0.0) {
        const double curv = t_ * suite_.phi(w_, 2);
        if (curv > 0.0 && std::isfinite(curv)) h0 = 1.0 / std::sqrt(curv);
    }
    if (!(h0 > 0.0) || !std::isfinite(h0)) {
        double scale = suite_.big_phi_inv(1.0 / t_);
        if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
        h0 = scale;
    }
    // Initial oscillation rate |x + t phi'(w)| (zero on a saddle contour).
    double freq = std::fabs(x_);
    try {
        freq = std::fabs(x_ + t_ * suite_.phi(w_, 1));
    } catch (const NumericalError&) {
        // phi'(w) unavailable (e.g. w = 0 with infinite mean): |x| is enough,
        // the per-panel phase measurement corrects the width immediately.
    }
    double h = 0.5 * h0;
    if (freq > 0.0) h = std::min(h, kMaxPhasePerPanel / freq);
    return h;
}

// Fits |integrand| ~ exp(-c u^p) through the log-moduli at edge/2 and edge and
// bounds the discarded tail by (U/p) b^{-1/p} Gamma(1/p, b), b = c U^p, times
// a safety factor of 4.  Returns +inf when no decaying fit is available yet.
double ContourMarch::truncation_bound(double edge, double g_edge) {
    const double inf = std::numeric_limits<double>::infinity();
    const double b = g_edge;
    if (!(b > 0.05) || !std::isfinite(b)) return inf;
    const double a = -exponent(0.5 * edge).real();
    nodes_ += 1;
    double p = 0.0;
    if (a > 0.05 && b > 1.02 * a) {
        p = std::log2(b / a);
    } else if (cfg_.tail_alpha > 0.0 && b > 3.0) {
        p = cfg_.tail_alpha;  // caller-supplied decay index as a fallback
    } else {
        return inf;
    }
    p = std::clamp(p, 0.05, 50.0);
    const double tail =
        (edge / p) * std::exp(-std::log(b) / p) * special::upper_gamma(1.0 / p, b);
    if (!std::isfinite(tail)) return 0.0;  // Gamma underflow: tail is negligible
    return 4.0 * tail;
}

MarchOut ContourMarch::run() {
    constexpr std::size_t kMaxPanels = 4'000'000;
    const double h0 = initial_width();

    quad::KahanSum<cplx> sum;
    quad::KahanSum<double> l1;
    double resid = 0.0;
    double noise = 0.0;
    double u = 0.0;
    double h = h0;
    double im_prev = 0.0;  // Im exponent at the trailing edge
    double trunc = std::numeric_limits<double>::infinity();
    const double inf = std::numeric_limits<double>::infinity();

    if (w_ == 0.0) {
        // On the w = 0 contour the origin is the integrand's one
        // non-analytic point (fractional or logarithmic powers of u enter
        // through phi(iu)), where dyadic splitting converges too slowly to
        // outrun the noise-plateau acceptance.  Geometric panels toward 0
        // restore analyticity on every sub-interval at fixed cost.
        const double eps = h * std::ldexp(1.0, -45);
        const cplx stub = eps * integrand(0.5 * eps);
        sum.add(stub);
        l1.add(std::abs(stub));
        double lo = eps;
        for (int j = 44; j >= 0; --j) {
            const double hi = h * std::ldexp(1.0, -j);
            const Panel p = refined_panel(lo, hi, 6, inf, &resid, &noise);
            sum.add(p.value);
            l1.add(p.l1);
            lo = hi;
        }
        u = h;
        im_prev = exponent(u).imag();
        nodes_ += 1;
    }

    for (std::size_t k = 0; k < kMaxPanels; ++k) {
        const Panel panel = refined_panel(u, u + h, 14, inf, &resid, &noise);
        sum.add(panel.value);
        l1.add(panel.l1);
        u += h;

        const cplx e_edge = exponent(u);
        nodes_ += 1;
        const double g_edge = -e_edge.real();

        // Absolute floor: once the modulus underflows double range the
        // remainder cannot register in any sum we report.
        if (g_edge > 745.0 + std::log1p(u)) {
            trunc = 0.0;
            break;
        }
        if (k >= 8 && k % 4 == 0 && g_edge > 3.0) {
            trunc = truncation_bound(u, g_edge);
            // The deliverable is the real part alone.  The imaginary part of
            // a one-sided march carries mass that never cancels, so |sum|
            // would overstate the stopping scale by the full cancellation
            // ratio at right-tail points.
            const double scale = std::max(std::fabs(sum.sum.real()), 1e-300);
            if (trunc <= 0.5 * cfg_.rel_tol * scale) break;
        }

        // Width for the next panel from the measured phase velocity.  The
        // refinement loop keeps panels correct if the estimate trails reality.
        const double freq = std::fabs(e_edge.imag() - im_prev) / h;
        im_prev = e_edge.imag();
        double next = 0.5 * h0;
        if (freq > 0.0) next = std::min(next, kMaxPhasePerPanel / (1.5 * freq));
        h = std::clamp(next, h / 8.0, 1.5 * h);
        if (!(h > 0.0) || !std::isfinite(h))
            throw NumericalError("contour inversion: panel width collapsed");
    }
    if (!std::isfinite(trunc))
        throw NoConvergence(
            "contour inversion: no decaying envelope found within the panel budget");

    MarchOut out;
    out.real_part = sum.sum.real();
    out.l1 = l1.sum;
    // Roundoff floor: each value carries a few ulp of its own magnitude, plus
    // the exponent-scaled jitter accumulated panel by panel.
    out.err = trunc + resid + noise + 5e-16 * l1.sum;
    out.nodes = nodes_;
    out.edge = u;
    if (std::getenv("SPD_MARCH_DEBUG"))
        std::fprintf(stderr,
                     "march w=%g edge=%.3f nodes=%zu sum=%.6e l1=%.3e trunc=%.2e "
                     "resid=%.2e noise=%.2e ulp=%.2e\n",
                     w_, u, nodes_, sum.sum.real(), l1.sum, trunc, resid, noise,
                     5e-16 * l1.sum);
    return out;
}

double resolve_contour(const ExponentSuite& suite, double t, double x,
                       const OracleConfig& cfg) {
    if (cfg.contour_w) {
        const double w = *cfg.contour_w;
        if (!(w >= 0.0) || !std::isfinite(w))
            throw RangeError("contour abscissa must be finite and >= 0");
        return w;
    }
    // The saddle abscissa minimizes the reattached amplitude exp(t phi(w) + wx)
    // over w >= 0, i.e. it is the best-conditioned contour whenever -x/t lies
    // in the range of phi'.
    try {
        return saddle_w(suite, t, x).w;
    } catch (const NumericalError&) {
        // fall through: pick by the sign of x instead
    }
    if (x >= 0.0) return 0.0;  // t phi(w) + wx is increasing in w here
    double w = suite.big_phi_inv(1.0 / t);
    if (!(w > 0.0) || !std::isfinite(w)) w = 1.0;
    return w;
}

void check_time_point(double t, double x) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw RangeError("time must be finite and > 0, got " + std::to_string(t));
    if (!std::isfinite(x))
        throw RangeError("position must be finite");
}

}  // namespace

DensityEstimate density_oracle(const ExponentSuite& suite, double t, double x,
                               const OracleConfig& cfg) {
    check_time_point(t, x);
    const double w = resolve_contour(suite, t, x, cfg);
    ContourMarch march(suite, t, x, w, cfg);
    const MarchOut out = march.run();

    const double pref = march.t_phi_w() + w * x;
    const double amp = std::exp(pref) / kPi;  // underflows to 0 deep in the left tail
    if (!std::isfinite(amp))
        throw NumericalError("contour inversion: prefactor exp(t phi(w) + w x) overflows");

    DensityEstimate est;
    est.method = DensityMethod::oracle;
    est.contour_w = w;
    est.nodes_used = out.nodes;
    est.error_indicator = amp * out.err;
    est.value = amp * out.real_part;
    if (est.value < 0.0) {
        if (est.value < -std::max(cfg.rel_tol, est.error_indicator))
            throw NegativeDensity("inversion value " + std::to_string(est.value) +
                                  " at (t, x) = (" + std::to_string(t) + ", " +
                                  std::to_string(x) + ") exceeds the negativity budget");
        est.value = 0.0;
        est.clamped = true;
    }
    return est;
}

double log_density_oracle(const ExponentSuite& suite, double t, double x,
                          const OracleConfig& cfg) {
    check_time_point(t, x);
    const double w = resolve_contour(suite, t, x, cfg);
    ContourMarch march(suite, t, x, w, cfg);
    const MarchOut out = march.run();
    if (!(out.real_part > 0.0))
        throw NegativeDensity("log-density requested where the inversion value is not positive");
    return march.t_phi_w() + w * x + std::log(out.real_part) - std::log(kPi);
}

double distribution_oracle(const ExponentSuite& suite, double t, double x,
                           const OracleConfig& cfg) {
    check_time_point(t, x);
    double w = resolve_contour(suite, t, x, cfg);
    if (!(w > 0.0)) {
        // The 1/z kernel has a pole at the origin; lift the contour to a
        // strictly positive abscissa.  For x <= 0 this can only shrink the
        // reattached amplitude, so it is always safe.
        w = suite.big_phi_inv(1.0 / t);
        if (x > 0.0) w = std::min(w, 8.0 / x);
        if (!(w > 0.0) || !std::isfinite(w))
            throw NumericalError("distribution inversion: no positive contour available");
    }
    ContourMarch march(suite, t, x, w, cfg, /*cdf=*/true);
    const MarchOut out = march.run();
    const double pref = march.t_phi_w() + w * x;
    const double amp = std::exp(pref) / kPi;
    if (!std::isfinite(amp))
        throw NumericalError("distribution inversion: prefactor overflows");
    const double value = amp * out.real_part;
    const double err = amp * out.err;
    if (value < -std::max(cfg.rel_tol, err) || value > 1.0 + std::max(cfg.rel_tol, err))
        throw NumericalError("distribution inversion: value " + std::to_string(value) +
                             " escapes [0, 1] beyond the error budget");
    return std::min(1.0, std::max(0.0, value));
}

CrossContour oracle_cross_contour(const ExponentSuite& suite, double t, double x,
                                  const OracleConfig& cfg) {
    CrossContour cc;
    const DensityEstimate a = density_oracle(suite, t, x, cfg);
    cc.value_saddle = a.value;
    OracleConfig psi = cfg;
    if (x < 0.0) {
        psi.contour_w = 0.0;
    } else {
        // The default abscissa for x >= 0 is the saddle or 0; cross-check
        // against the bulk localization scale, capped so the reattached
        // amplitude exp(t phi(w) + wx) stays small even for light-tailed
        // models whose right-tail density is many orders below the mode.
        double w = suite.big_phi_inv(1.0 / t);
        if (x > 0.0) w = std::min(w, 2.0 / x);
        if (!(w > 0.0) || !std::isfinite(w)) w = 1.0;
        psi.contour_w = w;
    }
    const DensityEstimate b = density_oracle(suite, t, x, psi);
    cc.value_psi = b.value;
    const double scale =
        std::max({std::fabs(cc.value_saddle), std::fabs(cc.value_psi), 1e-300});
    cc.discrepancy = std::fabs(cc.value_saddle - cc.value_psi) / scale;
    cc.budget_saddle = a.error_indicator / std::max(std::fabs(a.value), 1e-300);
    cc.budget_psi = b.error_indicator / std::max(std::fabs(b.value), 1e-300);
    cc.certified = cc.budget_saddle <= 1e-8 && cc.budget_psi <= 1e-8;
    return cc;
}

}  // namespace spd
