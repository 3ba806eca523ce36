#pragma once

// Sharp density envelopes for pure-jump models: a global upper majorant, a
// mode-window lower bound, a right-tail lower bound, and the assembled
// three-regime envelope.  Every value here is a *shape*: the matching
// constants are not computable from the model, so callers compare the oracle
// density against these shapes and report the empirical ratio band.

#include "spd/exponents.hpp"

namespace spd {

// Which branch of the three-regime envelope applies at (t, x), decided by the
// scale-free coordinate x * phi^{-1}(1/t).
enum class RegimeTag { left_tail, bulk, right_tail };

struct Regime {
    RegimeTag tag = RegimeTag::bulk;
    double boundary_value = 0.0;  // x * phi^{-1}(1/t)
};

const char* regime_name(RegimeTag tag);

struct EnvelopeValue {
    Regime regime;
    double value = 0.0;
};

// Majorant eta: nonincreasing on (0, inf), +inf at 0.
//   eta(s) = s^{-1} Phi*(1/s)          for 0 < s < 1/x0,
//   eta(s) = A s^{-1} |phi(1/s)|       for s >= 1/x0,
// with A = Phi*(x0)/|phi(x0)| chosen so the branches meet at s = 1/x0.
// For x0 = 0 the first branch covers all of (0, inf).
struct EtaMajorant {
    const ExponentSuite* suite = nullptr;
    double x0 = 0.0;
    double A = 0.0;  // meaningful only when x0 > 0
};

EtaMajorant make_majorant(const ExponentSuite& suite);
double eta(const EtaMajorant& majorant, double s);

// b_r = b + int s (1{s<r} - 1{s<1}) nu(ds).  For zero-mean pure-jump models
// this equals -int_r^inf s nu(ds).
double drift_compensator(const ExponentSuite& suite, double r);

// Upper-bound shape min{ Phi^{-1}(1/t), t eta(|x|) }.  Requires sigma = 0
// (HypothesisViolation) and t in (0, 1/Phi(x0)) (OutOfTimeRange).  The bound
// applies to the density at the compensated point x + t*b_{1/psi^{-1}(1/t)};
// the comparison harness applies that shift, not this function.
double upper_bound(const ExponentSuite& suite, const EtaMajorant& majorant,
                   double t, double x);

// x-interval around the near-mode point x_t = -t phi'(Phi^{-1}(M/t)) with
// radii rho1/Phi^{-1}(1/t) and rho2/Phi^{-1}(1/t); inside it the density is
// bounded below by a constant multiple of phi^{-1}(1/t).
struct ModeWindow {
    double center = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

ModeWindow mode_window(const ExponentSuite& suite, double t, double M,
                       double rho1, double rho2);

// Right-tail lower-bound shape t * nu(x) for x > 0 (sigma = 0, heavy jumps
// with local index > 1).  Valid in the region x * Phi^{-1}(1/t) >= rho0;
// tail_lower_in_region exposes that gate.
double tail_lower_shape(const ExponentSuite& suite, double t, double x);
bool tail_lower_in_region(const ExponentSuite& suite, double t, double x,
                          double rho0 = 4.0);

// Assembled three-regime envelope:
//   left_tail  (x phi^{-1}(1/t) <= -1):  (t phi''(w))^{-1/2} exp{-t(w phi'(w) - phi(w))},
//                                        w = (phi')^{-1}(-x/t);
//   bulk       (-1 < x phi^{-1}(1/t) <= 1):  phi^{-1}(1/t);
//   right_tail (x phi^{-1}(1/t) > 1):    t x^{-1} phi(1/x).
// Hypotheses checked: sigma = 0, theta1 = 0, phi'(0) = 0, empirical scaling
// indices 1 < alpha_hat <= beta_hat < 2, t in (0, 1/Phi(x0)), x < 1/x0.
EnvelopeValue envelope(const ExponentSuite& suite, double t, double x);

}  // namespace spd
