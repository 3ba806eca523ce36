#pragma once

// Spectrally positive Lévy models (sigma, b, nu) and the jump-measure
// primitives every other layer consumes: density, tail, exponentially
// weighted moments, and the unbounded-variation class test.
//
// Drift convention: b is the drift under the 1{x<1} cutoff, i.e.
//   phi(lambda) = sigma^2 lambda^2 - b lambda
//                 + int (e^{-lambda x} - 1 + lambda x 1{x<1}) nu(dx),
// and E e^{-lambda X_t} = e^{t phi(lambda)}.  Conversions to other cutoff
// radii live in the envelope layer (drift_compensator), nowhere else.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spd/quadrature.hpp"

namespace spd {

enum class TailDecay { exponential, polynomial };

// nu(x) = scale * x^{-1-alpha}, alpha in (1, 2).
struct StableJumps {
    double alpha;
    double scale = 1.0;
};

// nu(x) = scale * x^{-2}: the alpha = 1 boundary family, used with the
// phi(lambda) = scale * lambda ln(lambda) fixture.
struct StableBoundaryJumps {
    double scale = 1.0;
};

// nu(x) = scale * e^{-theta x} * x^{-1-alpha}, alpha in (0, 2).
struct TemperedStableJumps {
    double alpha;
    double theta;
    double scale = 1.0;
};

// nu(x) = scale * x^{-1-alpha} * 1{x < cutoff}, alpha in (0, 2).
struct TruncatedStableJumps {
    double alpha;
    double cutoff;
    double scale = 1.0;
};

// Black-box density.  The hints make the scaling-class membership tests and
// quadrature truncation well-posed: near zero nu(x) ~ x^{-1-singularity_order};
// at infinity the tail decays exponentially or like x^{-1-decay_index}.
struct CustomJumps {
    std::function<double(double)> density;
    std::function<double(double)> tail;  // optional nu((u, inf)); may be empty
    double singularity_order = 1.0;
    TailDecay decay = TailDecay::polynomial;
    double decay_index = 1.0;
};

using AtomicJumps = std::variant<StableJumps, StableBoundaryJumps,
                                 TemperedStableJumps, TruncatedStableJumps,
                                 CustomJumps>;

// Jump measures are kept in mixture normal form: a (possibly empty) list of
// atomic components whose Lévy measures add.  A single parametric family is a
// one-component mixture; nested mixtures flatten on construction.  An empty
// component list is nu == 0 (pure Brownian model).
struct JumpFamily {
    std::vector<AtomicJumps> components;

    JumpFamily() = default;
    JumpFamily(AtomicJumps one) { components.push_back(std::move(one)); }
    JumpFamily(std::vector<AtomicJumps> many) : components(std::move(many)) {}

    bool empty() const { return components.empty(); }
};

struct LevyModel {
    double sigma = 0.0;  // Gaussian coefficient: contributes sigma^2 lambda^2
    double b = 0.0;      // drift under the 1{x<1} cutoff convention
    JumpFamily jumps;    // empty => nu == 0
    double x0 = 0.0;     // scaling anchor below which WLSC is not asserted
    std::optional<double> declared_alpha;  // analytically known lower index
    std::optional<double> declared_beta;   // analytically known upper index
};

// ---------------------------------------------------------------------------
// Operations

struct ValidationVerdict {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks class membership: integrability int (1 ^ x^2) nu(dx) < inf, the
// unbounded-variation requirement (sigma > 0 or int_(0,1) x nu(dx) = inf),
// parameter ranges, and Custom hint consistency.  Violations are reported,
// not thrown; quadrature failures during checking are folded into the verdict.
ValidationVerdict validate_model(const LevyModel& model);

// Throwing wrapper used by suite construction: SchemaError listing violations.
void require_valid(const LevyModel& model);

// nu(x); sum over mixture components.
double jump_density(const LevyModel& model, double x);

// nu((u, inf)); closed forms where available, quadrature with decay-driven
// truncation otherwise.
double jump_tail(const LevyModel& model, double u);

struct MomentWindow {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    static MomentWindow all() { return {}; }
    static MomentWindow below(double r) { return {0.0, r}; }
    static MomentWindow above(double r) {
        return {r, std::numeric_limits<double>::infinity()};
    }
};

// int_window s^k e^{-lambda s} nu(ds), k in {0,1,2,3}, lambda >= 0.
// Incomplete-gamma closed forms for the parametric families, adaptive
// quadrature for Custom.  Throws DivergentMoment when provably infinite.
double weighted_moment(const LevyModel& model, int k, double lambda,
                       MomentWindow window = MomentWindow::all(),
                       const quad::Options& opt = {});

// E X_1 = b + int_[1,inf) x nu(dx); +infinity when the tail mean diverges.
// For nu == 0 returns b.
double mean_at_one(const LevyModel& model);

// Returns the model with b set so that phi'(0+) = 0 (zero mean).  Throws
// SchemaError when the tail mean is infinite.
LevyModel centered(LevyModel model);

// Conventional scaling anchor: Stable 0, StableBoundary 0, TemperedStable
// theta, TruncatedStable 1/cutoff, Custom 0 (callers supply their own);
// mixtures take the max over components.
double default_x0(const JumpFamily& jumps);

// scale value for which nu(x) = scale * x^{-1-alpha} yields phi(lambda) =
// lambda^alpha once the model is centered: alpha(alpha-1)/Gamma(2-alpha).
double stable_unit_scale(double alpha);

}  // namespace spd
