#pragma once

// Ground-truth transition density by contour inversion:
//
//   p(t, x) = (1/pi) * Re int_0^inf exp{ t phi(w + i u) + (w + i u) x } du,
//
// valid for every abscissa w >= 0 (the Laplace transform is analytic on
// Re z >= 0 and the integrand decays by the curvature of phi).  Two different
// w give independent evaluations of the same Cauchy integral; their agreement
// is the oracle's self-certification.
//
// Contour policy (auto):
//   x < 0  : w = saddle point (phi'(w) = -x/t)   -- stationary phase, no
//            cancellation, accurate arbitrarily deep into the left tail;
//   x >= 0 : w = min(Phi^{-1}(1/t), 8/x)         -- Phi^{-1}(1/t) is the bulk
//            localization scale; the 8/x cap keeps the e^{wx} amplification
//            (and with it the cancellation error) bounded by e^8.
//
// Quadrature: Gauss-Legendre 32 panels marched outward from u = 0, panel
// width driven by the measured local phase velocity, each panel dyadically
// refined; truncation by fitting a stretched-exponential envelope
// exp(-c u^p) to the integrand modulus at U/2 and U and bounding the
// remainder in closed form (with a factor-4 safety margin).

#include <optional>

#include "spd/density.hpp"
#include "spd/exponents.hpp"

namespace spd {

struct OracleConfig {
    double rel_tol = 1e-9;
    // Fixed contour abscissa; empty = automatic policy above.
    std::optional<double> contour_w;
    std::size_t max_nodes = 40'000'000;
    // Optional decay index used for the truncation bound when the envelope
    // fit is not yet decaying; 0 = rely on the fit alone.
    double tail_alpha = 0.0;
};

// Density estimate with method=oracle; error_indicator is an absolute bound
// combining truncation, panel refinement residuals, and a roundoff floor.
// Values in [-bound, 0) are clamped to zero with the clamped flag set; values
// below -bound throw NegativeDensity.
DensityEstimate density_oracle(const ExponentSuite& suite, double t, double x,
                               const OracleConfig& cfg = {});

// log p(t, x), usable where the density underflows (deep left tail).  Throws
// NegativeDensity if the computed value is not positive.
double log_density_oracle(const ExponentSuite& suite, double t, double x,
                          const OracleConfig& cfg = {});

// P(X_t <= x) by the same contour march with the integrand divided by z
// (distribution-function inversion).  The 1/z pole at the origin forces a
// strictly positive abscissa, so the automatic w = 0 fallback is lifted to
// the bulk scale.  The result is clamped to [0, 1]; escaping that interval
// beyond the error budget throws.  Used by normalization audits.
double distribution_oracle(const ExponentSuite& suite, double t, double x,
                           const OracleConfig& cfg = {});

struct CrossContour {
    double value_saddle = 0.0;   // automatic contour
    double value_psi = 0.0;      // w = 0 contour (characteristic-function route)
    double discrepancy = 0.0;    // |a - b| / max(|a|, |b|, tiny)
    double budget_saddle = 0.0;  // reported relative error of the automatic route
    double budget_psi = 0.0;     // reported relative error of the alternate route
    // True when both routes certify their own value to 1e-8 relative, making
    // the discrepancy a hard agreement test.  Points where one route is
    // cancellation-limited (extreme tails on the w = 0 contour) report
    // certified = false, and the discrepancy is only meaningful against the
    // combined reported budget.
    bool certified = false;
};

CrossContour oracle_cross_contour(const ExponentSuite& suite, double t, double x,
                                  const OracleConfig& cfg = {});

}  // namespace spd
