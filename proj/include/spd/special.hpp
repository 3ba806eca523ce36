#pragma once

// Small special-function layer: incomplete gamma at arbitrary real parameter
// (Boost.Math only covers a > 0), the exponential integral, and the
// cancellation-free kernel e^{-u} - 1 + u that every compensated jump
// integral is built from.

#include <complex>

namespace spd::special {

// Upper incomplete gamma Gamma(a, x) for x >= 0 and any real a.
// a <= 0 requires x > 0 (the integral diverges at x = 0); handled by the
// downward recurrence Gamma(a,x) = (Gamma(a+1,x) - x^a e^{-x}) / a, a
// Taylor-series continuation for small x, and E_1 for nonpositive integers.
double upper_gamma(double a, double x);

// Lower incomplete gamma gamma(a, x), a > 0, x >= 0.
double lower_gamma(double a, double x);

// Exponential integral E_1(x), x > 0.
double expint_e1(double x);

// e^{-u} - 1 + u, accurate near u = 0 (series below |u| = 1e-2).
double em1p(double u);
std::complex<double> em1p(std::complex<double> u);

}  // namespace spd::special
