#pragma once

// Saddle-point asymptotic for the transition density on the left tail:
// solve phi'(w) = -x/t, then
//
//   p(t, x) ~ (2 pi t phi''(w))^{-1/2} exp{ -t (w phi'(w) - phi(w)) },
//
// valid as the hardness t w^2 phi''(w) grows.

#include "spd/density.hpp"
#include "spd/exponents.hpp"

namespace spd {

struct SaddleResult {
    double w = 0.0;          // saddle point: phi'(w) = -x/t, w > theta1
    double hardness = 0.0;   // t * w^2 * phi''(w); the asymptotic's quality gauge
    double exponent = 0.0;   // t * (w phi'(w) - phi(w)), >= 0 when theta0 = 0
    double prefactor = 0.0;  // (2 pi t phi''(w))^{-1/2}
};

// Throws OutOfRange when -x/t is not in the range of phi' on (theta1, inf)
// (no saddle; the envelope regimes apply instead), NoConvergence on solver
// failure.
SaddleResult saddle_w(const ExponentSuite& suite, double t, double x);

// prefactor * exp(-exponent); method = asym, error_indicator = hardness.
DensityEstimate asym_density(const ExponentSuite& suite, double t, double x);

// log of asym_density, usable far into the tail where the density underflows.
double log_asym_density(const ExponentSuite& suite, double t, double x);

enum class RegionVerdict { inside, outside };

// inside iff the hardness gate t w^2 phi''(w) > M holds (points where the
// asymptotic is required to match the oracle).  No saddle => outside.
RegionVerdict asym_region(const ExponentSuite& suite, double t, double x, double M);

}  // namespace spd
