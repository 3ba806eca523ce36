#include "spd/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "spd/errors.hpp"
#include "spd/special.hpp"

namespace spd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_A^B x^p e^{-c x} dx for A >= 0, B <= inf, c >= 0.
// Throws DivergentMoment when an endpoint makes the integral infinite.
double power_exp_integral(double p, double c, double A, double B) {
    if (!(A >= 0.0) || !(B >= A)) throw RangeError("integration window must satisfy 0 <= lo <= hi");
    if (A == B) return 0.0;
    if (c == 0.0) {
        const double q = p + 1.0;
        if (q == 0.0) {
            if (A == 0.0 || std::isinf(B)) throw DivergentMoment("int x^-1 dx diverges at window edge");
            return std::log(B / A);
        }
        if (A == 0.0 && q < 0.0) throw DivergentMoment("moment diverges at zero");
        if (std::isinf(B) && q > 0.0) throw DivergentMoment("moment diverges at infinity");
        const double upper = std::isinf(B) ? 0.0 : std::pow(B, q);
        const double lower = (A == 0.0) ? 0.0 : std::pow(A, q);
        return (upper - lower) / q;
    }
    // y = c x:  c^{-p-1} * (Gamma(p+1, cA) - Gamma(p+1, cB)).
    const double a = p + 1.0;
    const double upper = std::isinf(B) ? 0.0 : special::upper_gamma(a, c * B);
    const double lower = special::upper_gamma(a, c * A);  // throws on a<=0, A=0
    return std::pow(c, -a) * (lower - upper);
}

struct WindowReal {
    double lo, hi;
};

WindowReal clip(const MomentWindow& w, double lo, double hi) {
    return {std::max(w.lo, lo), std::min(w.hi, hi)};
}

// --- per-component primitives ----------------------------------------------

double component_density(const AtomicJumps& c, double x) {
    if (x <= 0.0) return 0.0;
    return std::visit(
        [x](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>)
                return j.scale * std::pow(x, -1.0 - j.alpha);
            else if constexpr (std::is_same_v<T, StableBoundaryJumps>)
                return j.scale / (x * x);
            else if constexpr (std::is_same_v<T, TemperedStableJumps>)
                return j.scale * std::exp(-j.theta * x) * std::pow(x, -1.0 - j.alpha);
            else if constexpr (std::is_same_v<T, TruncatedStableJumps>)
                return x < j.cutoff ? j.scale * std::pow(x, -1.0 - j.alpha) : 0.0;
            else
                return j.density ? j.density(x) : 0.0;
        },
        c);
}

double component_moment(const AtomicJumps& c, int k, double lambda,
                        const MomentWindow& w, const quad::Options& opt) {
    if (k < 0 || k > 3) throw RangeError("weighted_moment supports k in {0,1,2,3}");
    if (!(lambda >= 0.0)) throw RangeError("weighted_moment requires lambda >= 0");
    return std::visit(
        [&](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>) {
                return j.scale * power_exp_integral(k - 1.0 - j.alpha, lambda, w.lo, w.hi);
            } else if constexpr (std::is_same_v<T, StableBoundaryJumps>) {
                return j.scale * power_exp_integral(k - 2.0, lambda, w.lo, w.hi);
            } else if constexpr (std::is_same_v<T, TemperedStableJumps>) {
                return j.scale * power_exp_integral(k - 1.0 - j.alpha, lambda + j.theta, w.lo, w.hi);
            } else if constexpr (std::is_same_v<T, TruncatedStableJumps>) {
                const auto win = clip(w, 0.0, j.cutoff);
                if (win.lo >= win.hi) return 0.0;
                return j.scale * power_exp_integral(k - 1.0 - j.alpha, lambda, win.lo, win.hi);
            } else {
                // Custom: divergence pre-checks from the hints, then quadrature.
                if (!j.density) throw SchemaError("custom jump component lacks a density");
                if (w.lo == 0.0 && k <= j.singularity_order)
                    throw DivergentMoment("weighted moment diverges at zero for this singularity order");
                if (std::isinf(w.hi) && lambda == 0.0 && j.decay == TailDecay::polynomial &&
                    k >= j.decay_index)
                    throw DivergentMoment("weighted moment diverges at infinity for this tail index");
                auto f = [&](double x) {
                    double v = j.density(x);
                    for (int i = 0; i < k; ++i) v *= x;
                    return lambda == 0.0 ? v : v * std::exp(-lambda * x);
                };
                double anchor = 1.0;
                if (std::isfinite(w.hi)) anchor = std::min(anchor, 0.5 * w.hi);
                if (w.lo > 0.0) anchor = std::max(anchor, 2.0 * w.lo);
                return quad::integrate_positive_axis(f, w.lo, w.hi, anchor, opt).value;
            }
        },
        c);
}

double component_tail(const AtomicJumps& c, double u) {
    return std::visit(
        [u](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>) {
                return j.scale * std::pow(u, -j.alpha) / j.alpha;
            } else if constexpr (std::is_same_v<T, StableBoundaryJumps>) {
                return j.scale / u;
            } else if constexpr (std::is_same_v<T, TemperedStableJumps>) {
                return j.scale * std::pow(j.theta, j.alpha) *
                       special::upper_gamma(-j.alpha, j.theta * u);
            } else if constexpr (std::is_same_v<T, TruncatedStableJumps>) {
                if (u >= j.cutoff) return 0.0;
                return j.scale * (std::pow(u, -j.alpha) - std::pow(j.cutoff, -j.alpha)) / j.alpha;
            } else {
                if (j.tail) return j.tail(u);
                return component_moment(AtomicJumps{j}, 0, 0.0, MomentWindow::above(u), {});
            }
        },
        c);
}

bool component_has_unbounded_variation(const AtomicJumps& c) {
    return std::visit(
        [](const auto& j) -> bool {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>)
                return true;  // alpha in (1,2)
            else if constexpr (std::is_same_v<T, StableBoundaryJumps>)
                return true;  // int_0^1 x * x^-2 dx = inf
            else if constexpr (std::is_same_v<T, TemperedStableJumps>)
                return j.alpha >= 1.0;
            else if constexpr (std::is_same_v<T, TruncatedStableJumps>)
                return j.alpha >= 1.0;
            else
                return j.singularity_order >= 1.0;
        },
        c);
}

void validate_component(const AtomicJumps& c, std::size_t idx,
                        std::vector<std::string>& out) {
    auto bad = [&](const std::string& msg) {
        std::ostringstream os;
        os << "component " << idx << ": " << msg;
        out.push_back(os.str());
    };
    std::visit(
        [&](const auto& j) {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, StableJumps>) {
                if (!(j.alpha > 1.0 && j.alpha < 2.0)) bad("stable index must lie in (1, 2)");
                if (!(j.scale > 0.0) || !std::isfinite(j.scale)) bad("scale must be positive and finite");
            } else if constexpr (std::is_same_v<T, StableBoundaryJumps>) {
                if (!(j.scale > 0.0) || !std::isfinite(j.scale)) bad("scale must be positive and finite");
            } else if constexpr (std::is_same_v<T, TemperedStableJumps>) {
                if (!(j.alpha > 0.0 && j.alpha < 2.0)) bad("tempered index must lie in (0, 2)");
                if (!(j.theta > 0.0) || !std::isfinite(j.theta)) bad("tempering rate must be positive and finite");
                if (!(j.scale > 0.0) || !std::isfinite(j.scale)) bad("scale must be positive and finite");
            } else if constexpr (std::is_same_v<T, TruncatedStableJumps>) {
                if (!(j.alpha > 0.0 && j.alpha < 2.0)) bad("truncated index must lie in (0, 2)");
                if (!(j.cutoff > 0.0) || !std::isfinite(j.cutoff)) bad("cutoff must be positive and finite");
                if (!(j.scale > 0.0) || !std::isfinite(j.scale)) bad("scale must be positive and finite");
            } else {
                if (!j.density) {
                    bad("custom component lacks a density callable");
                    return;
                }
                if (!(j.singularity_order >= 0.0 && j.singularity_order < 2.0))
                    bad("NonIntegrable: singularity order must lie in [0, 2) for int (1 ^ x^2) nu < inf");
                if (j.decay == TailDecay::polynomial && !(j.decay_index > 0.0))
                    bad("NonIntegrable: polynomial tail index must be positive for finite tail mass");
                // Spot non-negativity on a log grid.
                for (int i = 0; i <= 24; ++i) {
                    const double x = std::pow(10.0, -6.0 + 0.5 * i);
                    const double v = j.density(x);
                    if (!std::isfinite(v) || v < 0.0) {
                        std::ostringstream os;
                        os << "density is negative or non-finite at x = " << x;
                        bad(os.str());
                        break;
                    }
                }
                // Confirm integrability of (1 ^ x^2) nu(dx) numerically.
                try {
                    quad::Options opt;
                    opt.rel_tol = 1e-6;
                    (void)component_moment(AtomicJumps{j}, 2, 0.0, MomentWindow::below(1.0), opt);
                    (void)component_moment(AtomicJumps{j}, 0, 0.0, MomentWindow::above(1.0), opt);
                } catch (const DivergentMoment& e) {
                    bad(std::string("NonIntegrable: ") + e.what());
                } catch (const NumericalError& e) {
                    bad(std::string("QuadratureFailure while checking integrability: ") + e.what());
                }
            }
        },
        c);
}

}  // namespace

ValidationVerdict validate_model(const LevyModel& m) {
    ValidationVerdict v;
    auto bad = [&](const std::string& msg) { v.violations.push_back(msg); };

    if (!std::isfinite(m.sigma) || m.sigma < 0.0) bad("sigma must be finite and >= 0");
    if (!std::isfinite(m.b)) bad("drift b must be finite");
    if (!std::isfinite(m.x0) || m.x0 < 0.0) bad("x0 must be finite and >= 0");
    if (m.declared_alpha) {
        if (!(*m.declared_alpha > 0.0 && *m.declared_alpha <= 2.0))
            bad("declared lower scaling index must lie in (0, 2]");
    }
    if (m.declared_beta) {
        if (!(*m.declared_beta > 0.0 && *m.declared_beta <= 2.0))
            bad("declared upper scaling index must lie in (0, 2]");
        if (m.declared_alpha && *m.declared_beta < *m.declared_alpha)
            bad("declared upper scaling index must dominate the lower one");
    }

    for (std::size_t i = 0; i < m.jumps.components.size(); ++i)
        validate_component(m.jumps.components[i], i, v.violations);

    if (v.violations.empty()) {
        bool uv = m.sigma > 0.0;
        for (const auto& c : m.jumps.components) uv = uv || component_has_unbounded_variation(c);
        if (!uv)
            bad("BoundedVariation: need sigma > 0 or int_(0,1) x nu(dx) = inf; "
                "this model has paths of bounded variation");
    }

    v.ok = v.violations.empty();
    return v;
}

void require_valid(const LevyModel& m) {
    const auto v = validate_model(m);
    if (v.ok) return;
    std::ostringstream os;
    os << "invalid model:";
    for (const auto& s : v.violations) os << "\n  - " << s;
    throw SchemaError(os.str());
}

double jump_density(const LevyModel& m, double x) {
    double s = 0.0;
    for (const auto& c : m.jumps.components) s += component_density(c, x);
    return s;
}

double jump_tail(const LevyModel& m, double u) {
    if (!(u > 0.0)) {
        // Total mass: infinite for every admissible (unbounded-variation) family
        // with jumps, zero without.
        return m.jumps.empty() ? 0.0 : kInf;
    }
    double s = 0.0;
    for (const auto& c : m.jumps.components) s += component_tail(c, u);
    return s;
}

double weighted_moment(const LevyModel& m, int k, double lambda,
                       MomentWindow window, const quad::Options& opt) {
    if (!(window.lo >= 0.0) || !(window.hi >= window.lo))
        throw RangeError("moment window must satisfy 0 <= lo <= hi");
    double s = 0.0;
    for (const auto& c : m.jumps.components) s += component_moment(c, k, lambda, window, opt);
    return s;
}

double mean_at_one(const LevyModel& m) {
    double tail_mean = 0.0;
    try {
        tail_mean = weighted_moment(m, 1, 0.0, MomentWindow::above(1.0));
    } catch (const DivergentMoment&) {
        return kInf;
    }
    return m.b + tail_mean;
}

LevyModel centered(LevyModel m) {
    m.b = 0.0;
    const double mean = mean_at_one(m);
    if (!std::isfinite(mean))
        throw SchemaError("cannot center a model whose jump tail mean is infinite");
    m.b = -mean;
    return m;
}

double default_x0(const JumpFamily& jumps) {
    double x0 = 0.0;
    for (const auto& c : jumps.components) {
        x0 = std::max(x0, std::visit(
                              [](const auto& j) -> double {
                                  using T = std::decay_t<decltype(j)>;
                                  if constexpr (std::is_same_v<T, TemperedStableJumps>)
                                      return j.theta;
                                  else if constexpr (std::is_same_v<T, TruncatedStableJumps>)
                                      return 1.0 / j.cutoff;
                                  else
                                      return 0.0;
                              },
                              c));
    }
    return x0;
}

double stable_unit_scale(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw RangeError("stable index must lie in (1, 2)");
    return alpha * (alpha - 1.0) / boost::math::tgamma(2.0 - alpha);
}

}  // namespace spd
