#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spd/errors.hpp"
#include "spd/exponents.hpp"
#include "spd/fixtures.hpp"

using namespace spd;
using Catch::Approx;

namespace {
using cplx = std::complex<double>;
constexpr double kRoot2Over2 = 0.70710678118654752;
}  // namespace

TEST_CASE("stable exponent and derivatives reproduce the pure power") {
    ExponentSuite s(fixtures::stable15());
    CHECK(s.phi(0.0) == 0.0);
    CHECK(s.phi(4.0) == Approx(8.0).epsilon(1e-12));
    CHECK(s.phi(0.25) == Approx(0.125).epsilon(1e-12));
    CHECK(s.phi(4.0, 1) == Approx(3.0).epsilon(1e-12));
    CHECK(s.phi(0.0, 1) == Approx(0.0).margin(1e-12));  // centered
    CHECK(s.phi(4.0, 2) == Approx(0.375).epsilon(1e-12));
    CHECK(s.phi(4.0, 3) == Approx(-0.046875).epsilon(1e-11));
    CHECK(s.theta0() == 0.0);
    CHECK(s.theta1() == 0.0);
}

TEST_CASE("logarithmic fixture: phi = lambda ln lambda with its two roots") {
    ExponentSuite s(fixtures::boundary());
    CHECK(s.phi(2.0) == Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(s.phi(2.0, 1) == Approx(std::log(2.0) + 1.0).epsilon(1e-12));
    CHECK(s.phi(2.0, 2) == Approx(0.5).epsilon(1e-12));
    CHECK(s.phi(2.0, 3) == Approx(-0.25).epsilon(1e-11));
    CHECK(s.theta0() == Approx(1.0).epsilon(1e-12));
    CHECK(s.theta1() == Approx(std::exp(-1.0)).epsilon(1e-12));
    // The first moment integral behind phi'(0) diverges here.
    CHECK_THROWS_AS(s.phi(0.0, 1), DivergentMoment);
}

TEST_CASE("Brownian exponent is the exact parabola") {
    ExponentSuite s(fixtures::brownian());
    CHECK(s.phi(3.0) == Approx(9.0).epsilon(1e-15));
    CHECK(s.phi(3.0, 1) == Approx(6.0).epsilon(1e-15));
    CHECK(s.phi(3.0, 2) == Approx(2.0).epsilon(1e-15));
    CHECK(s.phi(3.0, 3) == 0.0);
    CHECK(s.theta0() == 0.0);
    CHECK(s.theta1() == 0.0);
}

TEST_CASE("exponentially tilted stable locates both roots") {
    ExponentSuite s(fixtures::tilted_stable(1.5, 1.0));  // phi = lambda^1.5 - lambda
    CHECK(s.theta0() == Approx(1.0).epsilon(1e-10));
    CHECK(s.theta1() == Approx(4.0 / 9.0).epsilon(1e-10));
    CHECK(s.phi(4.0) == Approx(4.0).epsilon(1e-11));
}

TEST_CASE("holomorphic extension agrees with the real axis and respects conjugation") {
    ExponentSuite s(fixtures::stable15());
    for (double lam : {0.3, 1.0, 7.0}) {
        const cplx z = s.phi_complex(cplx(lam, 0.0));
        CHECK(z.real() == Approx(s.phi(lam)).epsilon(1e-11));
        CHECK(z.imag() == Approx(0.0).margin(1e-11));
    }
    const cplx z(1.0, 2.0);
    const cplx a = s.phi_complex(z);
    const cplx b = s.phi_complex(std::conj(z));
    CHECK(a.real() == Approx(b.real()).epsilon(1e-13));
    CHECK(a.imag() == Approx(-b.imag()).epsilon(1e-13));
    // Analytic continuation of a pure power is the principal power.
    const cplx p = std::pow(z, 1.5);
    CHECK(a.real() == Approx(p.real()).epsilon(1e-9));
    CHECK(a.imag() == Approx(p.imag()).epsilon(1e-9));
}

TEST_CASE("characteristic exponent has nonnegative real part and the stable closed form") {
    ExponentSuite s(fixtures::stable15());
    for (double xi : {0.1, 1.0, 5.0, 40.0}) {
        const cplx psi = s.char_exponent(xi);
        CHECK(psi.real() == Approx(kRoot2Over2 * std::pow(xi, 1.5)).epsilon(1e-10));
        const cplx psim = s.char_exponent(-xi);
        CHECK(psim.real() == Approx(psi.real()).epsilon(1e-13));
        CHECK(psim.imag() == Approx(-psi.imag()).epsilon(1e-13));
    }
    ExponentSuite b(fixtures::boundary());
    for (double xi : {0.5, 3.0})
        CHECK(b.char_exponent(xi).real() ==
              Approx(0.5 * M_PI * xi).epsilon(1e-10));
    ExponentSuite t(fixtures::tempered15());
    for (double xi : {0.01, 0.7, 12.0}) CHECK(t.char_exponent(xi).real() >= 0.0);
}

TEST_CASE("concentration functions match stable closed forms") {
    ExponentSuite s(fixtures::stable15());
    // K(r) = 2 c r^{-3/2}, nu-tail adds c/1.5 r^{-3/2}, so h = (8/3) c r^{-3/2}.
    CHECK(s.pruitt_K(1.0) == Approx(0.84628437532163443).epsilon(1e-12));
    CHECK(s.pruitt_h(1.0) == Approx(1.1283791670955126).epsilon(1e-12));
    CHECK(s.pruitt_K(4.0) == Approx(0.84628437532163443 / 8.0).epsilon(1e-12));

    ExponentSuite b(fixtures::brownian());
    CHECK(b.pruitt_K(0.5) == Approx(4.0).epsilon(1e-14));
    CHECK(b.pruitt_h(0.5) == Approx(4.0).epsilon(1e-14));
}

TEST_CASE("curvature scale, running sup, and generalized inverse") {
    ExponentSuite s(fixtures::stable15());
    CHECK(s.big_phi(4.0) == Approx(6.0).epsilon(1e-12));          // 0.75 x^{3/2}
    CHECK(s.big_phi_star(4.0) == Approx(6.0).epsilon(1e-12));     // already increasing
    CHECK(s.big_phi_inv(1.0) == Approx(1.2114137285547598).epsilon(1e-10));
    CHECK(s.big_phi_inv(6.0) == Approx(4.0).epsilon(1e-10));
    // Generalized-inverse sandwich on a few levels.
    for (double level : {0.3, 2.0, 50.0}) {
        const double r = s.big_phi_inv(level);
        CHECK(s.big_phi_star(r) <= level * (1.0 + 1e-9));
        CHECK(s.big_phi_star(r * 1.001) >= level * (1.0 - 1e-9));
    }
}

TEST_CASE("running sup of the characteristic real part and its inverse") {
    ExponentSuite s(fixtures::stable15());
    CHECK(s.psi_star(2.0) == Approx(2.0).epsilon(1e-11));  // (sqrt2/2) r^{3/2}
    CHECK(s.psi_inv(2.0) == Approx(2.0).epsilon(1e-9));
    CHECK(s.psi_inv(1.0) == Approx(1.2599210498948732).epsilon(1e-9));
}

TEST_CASE("inverse of phi and of phi-prime round-trip") {
    ExponentSuite s(fixtures::stable15());
    CHECK(s.phi_inv(8.0) == Approx(4.0).epsilon(1e-11));
    CHECK(s.phi_inv(1.0) == Approx(1.0).epsilon(1e-11));
    CHECK(s.phi_prime_inv(3.0) == Approx(4.0).epsilon(1e-11));
    for (double x : {0.37, 2.0, 19.0})
        CHECK(s.phi_prime_inv(s.phi(x, 1)) == Approx(x).epsilon(1e-10));
    CHECK_THROWS_AS(s.phi_prime_inv(0.0), OutOfRange);
    CHECK_THROWS_AS(s.phi_prime_inv(-1.0), OutOfRange);

    ExponentSuite b(fixtures::boundary());
    CHECK(b.phi_inv(std::exp(1.0)) == Approx(std::exp(1.0)).epsilon(1e-10));
    // phi' spans all of R for the drifting boundary model: negative levels
    // are attained below theta1.
    CHECK(b.phi_prime_inv(-2.0) == Approx(std::exp(-3.0)).epsilon(1e-11));
    ExponentSuite t(fixtures::tilted_stable());
    CHECK(t.phi_prime_inv(0.0) == Approx(4.0 / 9.0).epsilon(1e-10));
    CHECK(t.phi_prime_inv(-0.5) == Approx(1.0 / 9.0).epsilon(1e-10));
    // phi'(0+) = -1 is the (unattained) lower edge of the range.
    CHECK_THROWS_AS(t.phi_prime_inv(-1.0), OutOfRange);
    CHECK_THROWS_AS(t.phi_prime_inv(-2.0), OutOfRange);
}

TEST_CASE("ladder exponent is the square root for the stable fixture") {
    ExponentSuite s(fixtures::stable15());
    CHECK(s.ladder_exponent(4.0) == Approx(2.0).epsilon(1e-12));
    CHECK(s.ladder_exponent(0.09) == Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(s.ladder_exponent(0.0), RangeError);

    ExponentSuite t(fixtures::tilted_stable());  // theta0 = 1
    CHECK_THROWS_AS(t.ladder_exponent(1.0), PoleAtTheta0);
    CHECK(t.ladder_exponent(4.0) == Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("ladder tail readings coincide at x = 1 and differ by the documented prefactor") {
    ExponentSuite s(fixtures::stable15());
    const double printed = s.ladder_tail(1.0, LadderReading::as_printed);
    const double corrected = s.ladder_tail(1.0, LadderReading::corrected);
    CHECK(printed == Approx(corrected).epsilon(1e-12));
    // theta0 = 0: the printed reading carries a spurious factor x.
    CHECK(s.ladder_tail(4.0, LadderReading::as_printed) ==
          Approx(4.0 * s.ladder_tail(4.0, LadderReading::corrected)).epsilon(1e-10));
    // corrected(x) = (4c/3) x^{-1/2}: at x = 4 this is 1/(2 sqrt(pi)).
    CHECK(s.ladder_tail(4.0, LadderReading::corrected) ==
          Approx(0.28209479177387814).epsilon(1e-8));
}

TEST_CASE("empirical scaling indices recover exact powers") {
    ExponentSuite s(fixtures::stable15());
    for (auto target : {ScalingTarget::phi, ScalingTarget::phi_dd, ScalingTarget::re_psi,
                        ScalingTarget::Phi}) {
        const auto r = s.scaling_report(target, 1.0, 100.0);
        CHECK(r.alpha_hat == Approx(1.5).epsilon(1e-8));
        CHECK(r.beta_hat == Approx(1.5).epsilon(1e-8));
        CHECK(r.c_hat == Approx(1.0).epsilon(1e-7));
        CHECK(r.C_hat == Approx(1.0).epsilon(1e-7));
    }
    ExponentSuite b(fixtures::brownian());
    const auto r = b.scaling_report(ScalingTarget::Phi, 0.1, 10.0);
    CHECK(r.alpha_hat == Approx(2.0).epsilon(1e-10));
    CHECK(r.beta_hat == Approx(2.0).epsilon(1e-10));
}

TEST_CASE("suite reads are safe and consistent under concurrent access") {
    ExponentSuite s(fixtures::stable15());
    const int n = 64;
    std::vector<double> serial(n);
    for (int i = 0; i < n; ++i) {
        const double r = 0.05 * (i + 1);
        serial[i] = s.big_phi_inv(r) + s.psi_star(r) + s.phi(r, 2);
    }
    std::vector<double> parallel(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int i = 0; i < n; ++i) {
        const double r = 0.05 * (i + 1);
        parallel[i] = s.big_phi_inv(r) + s.psi_star(r) + s.phi(r, 2);
    }
    for (int i = 0; i < n; ++i)
        CHECK(parallel[i] == Approx(serial[i]).epsilon(1e-12));
}
