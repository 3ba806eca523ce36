#include "spd/envelopes.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spd/errors.hpp"
#include "spd/model.hpp"
#include "spd/saddlepoint.hpp"

namespace spd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.28318530717958647692;

// Largest admissible time horizon 1/Phi(x0); +inf when x0 = 0.
double time_horizon(const ExponentSuite& suite) {
    const double x0 = suite.model().x0;
    if (!(x0 > 0.0)) return kInf;
    const double cap = suite.big_phi(x0);
    return cap > 0.0 ? 1.0 / cap : kInf;
}

void require_time(const ExponentSuite& suite, double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw OutOfTimeRange("time must be finite and > 0, got " + std::to_string(t));
    const double horizon = time_horizon(suite);
    if (!(t < horizon))
        throw OutOfTimeRange("time " + std::to_string(t) +
                             " is not below the horizon 1/Phi(x0) = " +
                             std::to_string(horizon));
}

void require_pure_jump(const ExponentSuite& suite, const char* who) {
    if (suite.model().sigma != 0.0)
        throw HypothesisViolation(std::string(who) +
                                  ": requires sigma = 0 (pure-jump model)");
}

// Local scaling indices: the declared values when the model carries them,
// otherwise measured from phi on a probe range above the localization point.
std::pair<double, double> scaling_indices(const ExponentSuite& suite) {
    const LevyModel& m = suite.model();
    if (m.declared_alpha && m.declared_beta) return {*m.declared_alpha, *m.declared_beta};
    if (m.declared_alpha && !m.declared_beta) return {*m.declared_alpha, *m.declared_alpha};
    const double lo = std::max(1e-3, 10.0 * m.x0);
    const double hi = std::max(1e3, 1e4 * lo);
    const ScalingReport rep = suite.scaling_report(ScalingTarget::phi, lo, hi);
    return {rep.alpha_hat, rep.beta_hat};
}

}  // namespace

const char* regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::left_tail: return "left_tail";
        case RegimeTag::bulk: return "bulk";
        case RegimeTag::right_tail: return "right_tail";
    }
    return "?";
}

EtaMajorant make_majorant(const ExponentSuite& suite) {
    EtaMajorant m;
    m.suite = &suite;
    m.x0 = suite.model().x0;
    if (m.x0 > 0.0) {
        const double denom = std::fabs(suite.phi(m.x0));
        if (!(denom > 0.0) || !std::isfinite(denom))
            throw NumericalError(
                "majorant constant undefined: phi vanishes at the localization point " +
                std::to_string(m.x0));
        m.A = suite.big_phi_star(m.x0) / denom;
    }
    return m;
}

double eta(const EtaMajorant& majorant, double s) {
    if (!(s >= 0.0) || !std::isfinite(s))
        throw RangeError("eta is defined on [0, inf), got s = " + std::to_string(s));
    if (s == 0.0) return kInf;
    const ExponentSuite& suite = *majorant.suite;
    if (majorant.x0 > 0.0 && s >= 1.0 / majorant.x0)
        return majorant.A * std::fabs(suite.phi(1.0 / s)) / s;
    return suite.big_phi_star(1.0 / s) / s;
}

double drift_compensator(const ExponentSuite& suite, double r) {
    if (!(r > 0.0))
        throw RangeError("drift compensator needs r > 0, got " + std::to_string(r));
    const LevyModel& m = suite.model();
    if (r == 1.0) return m.b;  // the two indicator windows cancel exactly
    if (r < 1.0) return m.b - weighted_moment(m, 1, 0.0, MomentWindow{r, 1.0});
    // Covers r = +inf too: the tail mean then raises DivergentMoment when infinite.
    return m.b + weighted_moment(m, 1, 0.0, MomentWindow{1.0, r});
}

double upper_bound(const ExponentSuite& suite, const EtaMajorant& majorant,
                   double t, double x) {
    require_pure_jump(suite, "upper_bound");
    require_time(suite, t);
    const double bulk = suite.big_phi_inv(1.0 / t);
    const double s = std::fabs(x);
    if (s == 0.0) return bulk;  // the eta term is +inf at 0
    return std::min(bulk, t * eta(majorant, s));
}

ModeWindow mode_window(const ExponentSuite& suite, double t, double M,
                       double rho1, double rho2) {
    require_pure_jump(suite, "mode_window");
    require_time(suite, t);
    if (!(M > 1.0))
        throw RangeError("mode window needs M > 1, got " + std::to_string(M));
    if (!(rho1 > 0.0) || !(rho2 > 0.0))
        throw RangeError("mode window needs positive radii");
    const auto [alpha_hat, beta_hat] = scaling_indices(suite);
    (void)beta_hat;
    if (!(alpha_hat >= 1.0))
        throw HypothesisViolation(
            "mode_window: requires local scaling index >= 1, measured " +
            std::to_string(alpha_hat));
    ModeWindow w;
    const double unit = suite.big_phi_inv(1.0 / t);  // localization scale
    w.center = -t * suite.phi(suite.big_phi_inv(M / t), 1);
    w.lo = w.center - rho1 / unit;
    w.hi = w.center + rho2 / unit;
    return w;
}

double tail_lower_shape(const ExponentSuite& suite, double t, double x) {
    require_pure_jump(suite, "tail_lower_shape");
    if (!(x > 0.0))
        throw HypothesisViolation("tail_lower_shape: requires x > 0");
    const auto [alpha_hat, beta_hat] = scaling_indices(suite);
    (void)beta_hat;
    if (!(alpha_hat > 1.0))
        throw HypothesisViolation(
            "tail_lower_shape: requires local scaling index > 1, measured " +
            std::to_string(alpha_hat));
    return t * jump_density(suite.model(), x);
}

bool tail_lower_in_region(const ExponentSuite& suite, double t, double x,
                          double rho0) {
    return x * suite.big_phi_inv(1.0 / t) >= rho0;
}

EnvelopeValue envelope(const ExponentSuite& suite, double t, double x) {
    require_pure_jump(suite, "envelope");
    if (suite.theta1() != 0.0)
        throw HypothesisViolation("envelope: requires theta1 = 0 (phi convexity foot at 0)");
    const double mean = mean_at_one(suite.model());
    if (!(std::fabs(mean) <= 1e-10 * (1.0 + std::fabs(suite.model().b))))
        throw HypothesisViolation("envelope: requires phi'(0) = 0 (zero mean), got mean " +
                                  std::to_string(mean));
    const auto [alpha_hat, beta_hat] = scaling_indices(suite);
    if (!(alpha_hat > 1.0 && alpha_hat <= beta_hat && beta_hat < 2.0))
        throw HypothesisViolation(
            "envelope: requires scaling indices 1 < alpha <= beta < 2, measured (" +
            std::to_string(alpha_hat) + ", " + std::to_string(beta_hat) + ")");
    require_time(suite, t);
    const double x0 = suite.model().x0;
    if (x0 > 0.0 && !(x < 1.0 / x0))
        throw HypothesisViolation("envelope: requires x < 1/x0 = " +
                                  std::to_string(1.0 / x0));

    EnvelopeValue out;
    const double unit = suite.phi_inv(1.0 / t);
    out.regime.boundary_value = x * unit;
    if (out.regime.boundary_value <= -1.0) {
        out.regime.tag = RegimeTag::left_tail;
        const SaddleResult s = saddle_w(suite, t, x);
        out.value = std::sqrt(kTwoPi) * s.prefactor * std::exp(-s.exponent);
    } else if (out.regime.boundary_value <= 1.0) {
        out.regime.tag = RegimeTag::bulk;
        out.value = unit;
    } else {
        out.regime.tag = RegimeTag::right_tail;
        out.value = t * suite.phi(1.0 / x) / x;
    }
    return out;
}

}  // namespace spd
