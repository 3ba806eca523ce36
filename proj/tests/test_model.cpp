#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "spd/errors.hpp"
#include "spd/fixtures.hpp"
#include "spd/model.hpp"

using namespace spd;
using Catch::Approx;

namespace {
constexpr double kC15 = 0.42314218766081722;  // stable_unit_scale(1.5)

// Direct quadrature of the jump density over (u, hi) as an independent check
// on the closed-form tails.
double tail_by_quadrature(const LevyModel& m, double u, double hi = 1e6) {
    auto r = quad::integrate_positive_axis(
        [&](double s) { return jump_density(m, s); }, u, hi, std::max(u, 1.0));
    return r.value;
}
}  // namespace

TEST_CASE("class membership validation accepts the fixture families") {
    CHECK(validate_model(fixtures::stable15()).ok);
    CHECK(validate_model(fixtures::boundary()).ok);
    CHECK(validate_model(fixtures::tempered15()).ok);
    CHECK(validate_model(fixtures::truncated()).ok);
    CHECK(validate_model(fixtures::brownian()).ok);
    CHECK(validate_model(fixtures::stable_plus_brownian()).ok);
    CHECK(validate_model(fixtures::custom_stable()).ok);
}

TEST_CASE("validation rejects out-of-range parameters") {
    LevyModel m;
    m.sigma = -1.0;
    CHECK_FALSE(validate_model(m).ok);

    LevyModel a;
    a.sigma = 1.0;
    a.declared_alpha = 2.5;
    CHECK_FALSE(validate_model(a).ok);

    LevyModel ba;
    ba.sigma = 1.0;
    ba.declared_alpha = 1.8;
    ba.declared_beta = 1.2;  // upper index below lower index
    CHECK_FALSE(validate_model(ba).ok);

    LevyModel s;
    s.jumps = JumpFamily(StableJumps{2.0, 1.0});  // index boundary excluded
    CHECK_FALSE(validate_model(s).ok);

    LevyModel s2;
    s2.jumps = JumpFamily(StableJumps{1.0, 1.0});
    CHECK_FALSE(validate_model(s2).ok);
}

TEST_CASE("bounded-variation pure-jump models are rejected") {
    LevyModel m;
    m.jumps = JumpFamily(TemperedStableJumps{0.5, 1.0, 1.0});
    const auto verdict = validate_model(m);
    REQUIRE_FALSE(verdict.ok);
    bool mentions_variation = false;
    for (const auto& s : verdict.violations)
        mentions_variation = mentions_variation || s.find("variation") != std::string::npos;
    CHECK(mentions_variation);

    // The same jumps ride on a Brownian component without complaint.
    m.sigma = 0.5;
    CHECK(validate_model(m).ok);

    CHECK_THROWS_AS(require_valid(LevyModel{}), SchemaError);  // no process at all
}

TEST_CASE("stable closed forms: density, tail, truncated moments") {
    const auto m = fixtures::stable15();
    CHECK(jump_density(m, 2.0) == Approx(kC15 * std::pow(2.0, -2.5)).epsilon(1e-14));
    CHECK(jump_tail(m, 4.0) == Approx(kC15 / 1.5 * std::pow(4.0, -1.5)).epsilon(1e-14));
    CHECK(jump_tail(m, 0.0) == std::numeric_limits<double>::infinity());

    // int_(0,r) s^2 nu(ds) = 2 c sqrt(r)
    CHECK(weighted_moment(m, 2, 0.0, MomentWindow::below(9.0)) ==
          Approx(2.0 * kC15 * 3.0).epsilon(1e-12));
    // int_(1,inf) s nu(ds) = 2 c
    CHECK(weighted_moment(m, 1, 0.0, MomentWindow::above(1.0)) ==
          Approx(2.0 * kC15).epsilon(1e-12));

    CHECK_THROWS_AS(weighted_moment(m, 0, 0.0), DivergentMoment);   // nu has infinite mass
    CHECK_THROWS_AS(weighted_moment(m, 1, 0.0), DivergentMoment);   // diverges at zero
    CHECK_THROWS_AS(weighted_moment(m, 1, 0.0, MomentWindow{-1.0, 1.0}), RangeError);
}

TEST_CASE("exponentially weighted stable moments agree with quadrature") {
    const auto m = fixtures::stable15();
    for (double lam : {0.3, 2.0}) {
        auto direct = quad::integrate_positive_axis(
            [&](double s) { return s * s * std::exp(-lam * s) * jump_density(m, s); },
            0.0, std::numeric_limits<double>::infinity(), 1.0);
        CHECK(weighted_moment(m, 2, lam) == Approx(direct.value).epsilon(1e-8));
    }
}

TEST_CASE("tempered and truncated tails match direct quadrature") {
    const auto tm = fixtures::tempered15();
    for (double u : {0.25, 1.0, 4.0})
        CHECK(jump_tail(tm, u) == Approx(tail_by_quadrature(tm, u, 200.0)).epsilon(1e-8));

    const auto tr = fixtures::truncated(1.5, 1.0);
    CHECK(jump_tail(tr, 0.5) == Approx(tail_by_quadrature(tr, 0.5, 1.0)).epsilon(1e-8));
    CHECK(jump_tail(tr, 1.0) == 0.0);
    CHECK(jump_tail(tr, 3.0) == 0.0);
    CHECK(jump_density(tr, 3.0) == 0.0);
}

TEST_CASE("boundary family: reciprocal tail, infinite mean, centering refused") {
    const auto m = fixtures::boundary();
    CHECK(jump_density(m, 3.0) == Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(jump_tail(m, 3.0) == Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(mean_at_one(m) == std::numeric_limits<double>::infinity());

    LevyModel j;
    j.jumps = JumpFamily(StableBoundaryJumps{1.0});
    CHECK_THROWS_AS(centered(j), SchemaError);
}

TEST_CASE("centering zeroes the mean and pins the stable drift") {
    const auto m = fixtures::stable15();
    CHECK(m.b == Approx(-2.0 * kC15).epsilon(1e-14));
    CHECK(mean_at_one(m) == Approx(0.0).margin(1e-13));

    const auto bm = fixtures::brownian();
    CHECK(mean_at_one(bm) == 0.0);
}

TEST_CASE("mixtures add densities and take the coarsest anchor") {
    LevyModel m;
    m.sigma = 0.0;
    m.jumps = JumpFamily(std::vector<AtomicJumps>{
        StableJumps{1.5, 1.0}, TemperedStableJumps{1.2, 2.0, 0.5}});
    m.b = 0.0;
    const double x = 0.7;
    const double expect = std::pow(x, -2.5) + 0.5 * std::exp(-2.0 * x) * std::pow(x, -2.2);
    CHECK(jump_density(m, x) == Approx(expect).epsilon(1e-14));
    LevyModel stable_only;
    stable_only.jumps = JumpFamily(StableJumps{1.5, 1.0});
    LevyModel tempered_only;
    tempered_only.jumps = JumpFamily(TemperedStableJumps{1.2, 2.0, 0.5});
    CHECK(jump_tail(m, x) ==
          Approx(jump_tail(stable_only, x) + jump_tail(tempered_only, x))
              .epsilon(1e-13));
    CHECK(default_x0(m.jumps) == 2.0);  // tempering rate dominates the stable anchor 0

    CHECK(default_x0(fixtures::truncated(1.5, 0.25).jumps) == 4.0);
    CHECK(default_x0(fixtures::stable15().jumps) == 0.0);
}

TEST_CASE("black-box jumps reproduce their parametric mirror") {
    const auto ref = fixtures::stable15();
    const auto cus = fixtures::custom_stable(1.5);
    for (double x : {0.1, 1.0, 10.0})
        CHECK(jump_density(cus, x) == Approx(jump_density(ref, x)).epsilon(1e-12));
    for (double u : {0.5, 2.0})
        CHECK(jump_tail(cus, u) == Approx(jump_tail(ref, u)).epsilon(1e-7));
    CHECK(weighted_moment(cus, 2, 1.0) ==
          Approx(weighted_moment(ref, 2, 1.0)).epsilon(1e-7));
    CHECK(mean_at_one(cus) == Approx(0.0).margin(1e-7));
}

TEST_CASE("custom hints are validated") {
    CustomJumps j;  // no density callable
    LevyModel m;
    m.jumps = JumpFamily(std::vector<AtomicJumps>{j});
    CHECK_FALSE(validate_model(m).ok);

    CustomJumps neg;
    neg.density = [](double) { return -1.0; };
    neg.singularity_order = 1.5;
    neg.decay_index = 1.5;
    LevyModel mn;
    mn.jumps = JumpFamily(std::vector<AtomicJumps>{neg});
    CHECK_FALSE(validate_model(mn).ok);
}

TEST_CASE("unit-scale calibration solves phi(lambda) = lambda^alpha") {
    CHECK(stable_unit_scale(1.5) == Approx(kC15).epsilon(1e-15));
    for (double a : {1.2, 1.8})
        CHECK(stable_unit_scale(a) ==
              Approx(a * (a - 1.0) / std::tgamma(2.0 - a)).epsilon(1e-14));
}
