#pragma once

// Canonical calibrated models shared by the tests, the acceptance harness,
// and the benchmark.  Each returns a model whose Laplace exponent has a
// closed form, so every numerical layer can be checked against hand-derived
// values.

#include <cmath>
#include <utility>

#include "spd/model.hpp"

namespace spd::fixtures {

// phi(lambda) = lambda^alpha exactly, alpha in (1, 2): unit-calibrated
// one-sided stable jumps, centered drift.
inline LevyModel stable(double alpha) {
    LevyModel m;
    m.jumps = JumpFamily{AtomicJumps{StableJumps{alpha, stable_unit_scale(alpha)}}};
    m.declared_alpha = alpha;
    m.declared_beta = alpha;
    return centered(m);
}

inline LevyModel stable15() { return stable(1.5); }

// phi(lambda) = lambda ln(lambda): the alpha = 1 boundary family
// (nu(x) = x^{-2}, b = gamma_E - 1).  theta0 = 1, theta1 = 1/e.
inline LevyModel boundary() {
    LevyModel m;
    m.jumps = JumpFamily{AtomicJumps{StableBoundaryJumps{1.0}}};
    m.b = 0.57721566490153286 - 1.0;
    m.declared_alpha = 1.0;
    m.declared_beta = 1.0;
    return m;
}

// Exponentially tempered stable, centered; scaling anchor x0 = theta.
inline LevyModel tempered(double alpha = 1.5, double theta = 1.0) {
    LevyModel m;
    m.jumps = JumpFamily{
        AtomicJumps{TemperedStableJumps{alpha, theta, stable_unit_scale(alpha)}}};
    m.x0 = default_x0(m.jumps);
    m.declared_alpha = alpha;
    m.declared_beta = alpha;
    return centered(m);
}

inline LevyModel tempered15() { return tempered(1.5, 1.0); }

// Jumps truncated at `cutoff`, centered; scaling anchor x0 = 1/cutoff.
inline LevyModel truncated(double alpha = 1.5, double cutoff = 1.0) {
    LevyModel m;
    m.jumps = JumpFamily{
        AtomicJumps{TruncatedStableJumps{alpha, cutoff, stable_unit_scale(alpha)}}};
    m.x0 = default_x0(m.jumps);
    m.declared_alpha = alpha;
    m.declared_beta = alpha;
    return centered(m);
}

// Pure Brownian component: phi(lambda) = sigma^2 lambda^2.
inline LevyModel brownian(double sigma = 1.0) {
    LevyModel m;
    m.sigma = sigma;
    m.declared_alpha = 2.0;
    m.declared_beta = 2.0;
    return m;
}

// Stable jumps plus a Gaussian part: upper scaling index 2.
inline LevyModel stable_plus_brownian(double alpha = 1.5, double sigma = 0.5) {
    LevyModel m = stable(alpha);
    m.sigma = sigma;
    m.declared_beta = 2.0;
    return m;
}

// Positive-mean variant: adds drift d > 0 on top of the centered stable, so
// phi(lambda) = lambda^alpha - d lambda has theta0 = d^{1/(alpha-1)} > 0.
inline LevyModel tilted_stable(double alpha = 1.5, double d = 1.0) {
    LevyModel m = stable(alpha);
    m.b += d;
    return m;
}

// Black-box mirror of stable(alpha): same Lévy measure through the Custom
// quadrature path, for cross-validating closed forms.
inline LevyModel custom_stable(double alpha = 1.5) {
    const double s = stable_unit_scale(alpha);
    CustomJumps c;
    c.density = [s, alpha](double x) { return s * std::pow(x, -1.0 - alpha); };
    c.tail = [s, alpha](double u) { return (s / alpha) * std::pow(u, -alpha); };
    c.singularity_order = alpha;
    c.decay = TailDecay::polynomial;
    c.decay_index = alpha;
    LevyModel m;
    m.jumps = JumpFamily{AtomicJumps{std::move(c)}};
    m.declared_alpha = alpha;
    m.declared_beta = alpha;
    return centered(m);
}

}  // namespace spd::fixtures
