#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spd/envelopes.hpp"
#include "spd/errors.hpp"
#include "spd/fixtures.hpp"
#include "spd/saddlepoint.hpp"

using namespace spd;
using Catch::Approx;

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kPhiInv1 = 1.2114137285547598;  // Phi^{-1}(1) for the stable fixture
}  // namespace

TEST_CASE("majorant branches and monotonicity on the stable fixture") {
    ExponentSuite s(fixtures::stable15());
    const auto maj = make_majorant(s);
    // x0 = 0: eta(s) = s^{-1} Phi*(1/s) everywhere; Phi*(x) = 0.75 x^{3/2}.
    CHECK(eta(maj, 1.0) == Approx(0.75).epsilon(1e-11));
    CHECK(eta(maj, 2.0) == Approx(0.13258252147247766).epsilon(1e-10));
    double prev = std::numeric_limits<double>::infinity();
    for (double sx = 0.1; sx < 30.0; sx *= 1.7) {
        const double v = eta(maj, sx);
        CHECK(v <= prev * (1.0 + 1e-12));
        prev = v;
    }
    CHECK_THROWS_AS(eta(maj, -1.0), RangeError);
}

TEST_CASE("majorant branches join continuously when the anchor is positive") {
    ExponentSuite s(fixtures::tempered15());  // x0 = tempering rate = 1
    const auto maj = make_majorant(s);
    REQUIRE(maj.x0 == 1.0);
    const double left = eta(maj, 1.0 / maj.x0 * (1.0 - 1e-9));
    const double right = eta(maj, 1.0 / maj.x0 * (1.0 + 1e-9));
    CHECK(left == Approx(right).epsilon(1e-6));
}

TEST_CASE("drift compensator reduces to the negative tail mean for centered pure-jump models") {
    ExponentSuite s(fixtures::stable15());
    CHECK(drift_compensator(s, 1.0) == Approx(-0.84628437532163443).epsilon(1e-10));
    CHECK(drift_compensator(s, 4.0) == Approx(-0.42314218766081722).epsilon(1e-10));
    CHECK_THROWS_AS(drift_compensator(s, 0.0), RangeError);
}

TEST_CASE("upper bound takes the smaller of the bulk plateau and the majorant arm") {
    ExponentSuite s(fixtures::stable15());
    const auto maj = make_majorant(s);
    CHECK(upper_bound(s, maj, 1.0, 2.0) ==
          Approx(0.13258252147247766).epsilon(1e-10));      // t eta(|x|) wins
    CHECK(upper_bound(s, maj, 1.0, 0.01) ==
          Approx(kPhiInv1).epsilon(1e-9));                   // plateau wins near the mode

    ExponentSuite b(fixtures::brownian());
    const auto bmaj = EtaMajorant{&b, 0.0, 0.0};
    CHECK_THROWS_AS(upper_bound(b, bmaj, 1.0, 1.0), HypothesisViolation);
}

TEST_CASE("mode window centers on the near-mode point") {
    ExponentSuite s(fixtures::stable15());
    const auto win = mode_window(s, 1.0, 2.0, 1.0, 1.0);
    CHECK(win.center == Approx(-2.0800838230519041).epsilon(1e-9));  // -3^{2/3}
    CHECK(win.hi - win.center == Approx(1.0 / kPhiInv1).epsilon(1e-9));
    CHECK(win.center - win.lo == Approx(1.0 / kPhiInv1).epsilon(1e-9));
    CHECK_THROWS_AS(mode_window(s, 1.0, 0.5, 1.0, 1.0), RangeError);
    CHECK_THROWS_AS(mode_window(s, 1.0, 2.0, -1.0, 1.0), RangeError);
}

TEST_CASE("right-tail lower shape is the jump intensity times time") {
    ExponentSuite s(fixtures::stable15());
    CHECK(tail_lower_shape(s, 1.0, 2.0) == Approx(0.074801677575268627).epsilon(1e-10));
    CHECK(tail_lower_shape(s, 0.5, 2.0) ==
          Approx(0.5 * 0.074801677575268627).epsilon(1e-10));
    CHECK_THROWS_AS(tail_lower_shape(s, 1.0, -1.0), HypothesisViolation);

    CHECK_FALSE(tail_lower_in_region(s, 1.0, 2.0));  // x Phi^{-1}(1/t) = 2.42
    CHECK(tail_lower_in_region(s, 1.0, 4.0));        // 4.85 > 4
}

TEST_CASE("assembled envelope: branch values at the documented checkpoints") {
    ExponentSuite s(fixtures::stable15());

    const auto left = envelope(s, 1.0, -3.0);
    CHECK(left.regime.tag == RegimeTag::left_tail);
    CHECK(left.regime.boundary_value == Approx(-3.0).epsilon(1e-10));  // phi^{-1}(1) = 1
    CHECK(left.value ==
          Approx(kSqrt2Pi * asym_density(s, 1.0, -3.0).value).epsilon(1e-9));

    const auto bulk = envelope(s, 1.0, 0.0);
    CHECK(bulk.regime.tag == RegimeTag::bulk);
    CHECK(bulk.value == Approx(1.0).epsilon(1e-10));  // phi^{-1}(1)

    const auto right = envelope(s, 1.0, 2.0);
    CHECK(right.regime.tag == RegimeTag::right_tail);
    CHECK(right.value == Approx(0.17677669529663688).epsilon(1e-10));  // t x^{-1} phi(1/x)
}

TEST_CASE("regime boundaries sit at the scale-free points -1 and +1") {
    ExponentSuite s(fixtures::stable15());
    CHECK(envelope(s, 1.0, -1.0).regime.tag == RegimeTag::left_tail);
    CHECK(envelope(s, 1.0, -0.999).regime.tag == RegimeTag::bulk);
    CHECK(envelope(s, 1.0, 1.0).regime.tag == RegimeTag::bulk);
    CHECK(envelope(s, 1.0, 1.001).regime.tag == RegimeTag::right_tail);
    CHECK(std::string(regime_name(RegimeTag::left_tail)) == "left_tail");
    CHECK(std::string(regime_name(RegimeTag::bulk)) == "bulk");
    CHECK(std::string(regime_name(RegimeTag::right_tail)) == "right_tail");
}

TEST_CASE("envelope hypotheses are enforced") {
    ExponentSuite b(fixtures::brownian());
    CHECK_THROWS_AS(envelope(b, 1.0, 0.0), HypothesisViolation);  // sigma != 0

    ExponentSuite tilt(fixtures::tilted_stable());
    CHECK_THROWS_AS(envelope(tilt, 1.0, 0.0), HypothesisViolation);  // nonzero mean / theta1

    ExponentSuite bd(fixtures::boundary());
    CHECK_THROWS_AS(envelope(bd, 0.5, 0.0), HypothesisViolation);  // index pinned at 1

    ExponentSuite tm(fixtures::tempered15());  // finite horizon 1/Phi(1), anchor 1
    const double horizon = 1.0 / tm.big_phi(1.0);
    CHECK_THROWS_AS(envelope(tm, 2.0 * horizon, 0.1), OutOfTimeRange);
    CHECK_THROWS_AS(envelope(tm, 0.5 * horizon, 1.5), HypothesisViolation);  // x >= 1/x0
    const auto ok = envelope(tm, 0.5 * horizon, 0.3);
    CHECK(ok.value > 0.0);

    CHECK_THROWS_AS(envelope(tm, -1.0, 0.0), OutOfTimeRange);
}
