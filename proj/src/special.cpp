#include "spd/special.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "spd/errors.hpp"

namespace spd::special {

namespace {

bool is_integer(double a) { return std::fabs(a - std::rint(a)) < 1e-13; }

// Gamma(a, x) for nonpositive integer a = -m via downward recurrence from
// Gamma(0, x) = E_1(x).
double upper_gamma_nonpos_int(int m, double x) {
    double g = boost::math::expint(1, x);  // Gamma(0, x)
    for (int k = 1; k <= m; ++k) {
        g = (g - std::pow(x, static_cast<double>(-k)) * std::exp(-x)) /
            static_cast<double>(-k);
    }
    return g;
}

// Taylor continuation for non-integer a and small x:
//   Gamma(a, x) = Gamma(a) - x^a * sum_{n>=0} (-x)^n / (n! (a+n)).
double upper_gamma_series(double a, double x) {
    double sum = 1.0 / a;
    double term = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= -x / n;
        const double inc = term / (a + n);
        sum += inc;
        if (std::fabs(inc) < 1e-17 * std::fabs(sum)) break;
    }
    return std::tgamma(a) - std::pow(x, a) * sum;
}

}  // namespace

double upper_gamma(double a, double x) {
    if (x < 0.0 || !std::isfinite(x))
        throw NumericalError("upper_gamma: x must be finite and nonnegative");
    if (a > 0.0) {
        if (x == 0.0) return std::tgamma(a);
        return boost::math::tgamma(a, x);
    }
    if (x == 0.0)
        throw DivergentMoment("upper_gamma: Gamma(a, 0) diverges for a <= 0");
    if (is_integer(a)) {
        return upper_gamma_nonpos_int(static_cast<int>(std::rint(-a)), x);
    }
    if (x <= 1.0) return upper_gamma_series(a, x);
    // x > 1: downward recurrence from the smallest positive shift; the
    // subtraction loses at most a few digits because the terms have
    // different orders of magnitude away from a ~ 0.
    const int m = static_cast<int>(std::ceil(-a));
    double g = boost::math::tgamma(a + m, x);
    for (int k = m - 1; k >= 0; --k) {
        const double ak = a + k;
        g = (g - std::pow(x, ak) * std::exp(-x)) / ak;
    }
    if (!std::isfinite(g))
        throw NumericalError("upper_gamma: overflow in recurrence");
    return g;
}

double lower_gamma(double a, double x) {
    if (!(a > 0.0))
        throw NumericalError("lower_gamma: requires a > 0");
    if (x < 0.0)
        throw NumericalError("lower_gamma: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return boost::math::tgamma_lower(a, x);
}

double expint_e1(double x) {
    if (!(x > 0.0))
        throw NumericalError("expint_e1: requires x > 0");
    return boost::math::expint(1, x);
}

double em1p(double u) {
    if (std::fabs(u) < 1e-2) {
        // u^2/2 - u^3/6 + ... - u^9/9!; next term < 1e-19 relative at |u|=1e-2.
        double term = u * u / 2.0;
        double sum = term;
        for (int n = 3; n <= 9; ++n) {
            term *= -u / n;
            sum += term;
        }
        return sum;
    }
    return std::expm1(-u) + u;
}

std::complex<double> em1p(std::complex<double> u) {
    if (std::abs(u) < 1e-2) {
        std::complex<double> term = u * u / 2.0;
        std::complex<double> sum = term;
        for (int n = 3; n <= 9; ++n) {
            term *= -u / static_cast<double>(n);
            sum += term;
        }
        return sum;
    }
    return std::exp(-u) - 1.0 + u;
}

}  // namespace spd::special
