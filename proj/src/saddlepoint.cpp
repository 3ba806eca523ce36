#include "spd/saddlepoint.hpp"

#include <cmath>

#include "spd/errors.hpp"

namespace spd {

namespace {
constexpr double kTwoPi = 6.283185307179586477;
}

SaddleResult saddle_w(const ExponentSuite& suite, double t, double x) {
    if (!(t > 0.0)) throw RangeError("saddle solve requires t > 0");
    const double y = -x / t;
    const double w = suite.phi_prime_inv(y);  // throws OutOfRange below the edge
    if (!(w > 0.0) || !std::isfinite(w))
        throw NoConvergence("saddle solve did not produce a finite positive w");

    SaddleResult r;
    r.w = w;
    const double phi0 = suite.phi(w);
    const double phi1 = suite.phi(w, 1);
    const double phi2 = suite.phi(w, 2);
    if (!(phi2 > 0.0)) throw NoConvergence("phi'' non-positive at the saddle");
    r.hardness = t * w * w * phi2;
    r.exponent = t * (w * phi1 - phi0);
    r.prefactor = 1.0 / std::sqrt(kTwoPi * t * phi2);
    return r;
}

DensityEstimate asym_density(const ExponentSuite& suite, double t, double x) {
    const SaddleResult s = saddle_w(suite, t, x);
    DensityEstimate d;
    d.method = DensityMethod::asym;
    d.value = s.prefactor * std::exp(-s.exponent);
    d.error_indicator = s.hardness;
    return d;
}

double log_asym_density(const ExponentSuite& suite, double t, double x) {
    const SaddleResult s = saddle_w(suite, t, x);
    return std::log(s.prefactor) - s.exponent;
}

RegionVerdict asym_region(const ExponentSuite& suite, double t, double x, double M) {
    if (!(M > 0.0)) throw RangeError("region gate requires M > 0");
    try {
        const SaddleResult s = saddle_w(suite, t, x);
        return s.hardness > M ? RegionVerdict::inside : RegionVerdict::outside;
    } catch (const OutOfRange&) {
        return RegionVerdict::outside;
    } catch (const NoBracket&) {
        return RegionVerdict::outside;
    }
}

}  // namespace spd
