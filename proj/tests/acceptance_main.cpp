// Acceptance gate: ten numbered criteria, one [PASS]/[FAIL] line each, exit
// status = number of failures.  Each criterion owns its fixtures, grids, and
// pinned tolerances; timings are part of the pass condition where noted.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "spd/envelopes.hpp"
#include "spd/errors.hpp"
#include "spd/exponents.hpp"
#include "spd/fixtures.hpp"
#include "spd/inversion.hpp"
#include "spd/saddlepoint.hpp"
#include "spd/validation.hpp"

using namespace spd;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail,
            double secs) {
    std::printf("[%s] %2d: %-26s %s (%.1f s)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<double> log_pts(double lo, double hi, int n) {
    std::vector<double> out(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * i / (n - 1));
    return out;
}

std::vector<double> lin_pts(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

struct Band {
    double mn = kInf, mx = 0.0;
    void add(double v) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    double ratio() const { return mn > 0.0 ? mx / mn : kInf; }
};

// --------------------------------------------------------------------------
// 1. Diffusive exactness: the asymptotic IS the Gaussian density, and the
//    contour oracle reproduces it.
void criterion_1() {
    Stopwatch sw;
    ExponentSuite s(fixtures::brownian());
    double worst_asym = 0.0, worst_oracle = 0.0;
    for (double t : {0.1, 1.0, 10.0}) {
        for (double x : lin_pts(-10.0, -0.1, 51)) {
            const double exact = std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * kPi * t);
            const double a = asym_density(s, t, x).value;
            const double o = density_oracle(s, t, x).value;
            worst_asym = std::max(worst_asym, std::fabs(a / exact - 1.0));
            worst_oracle = std::max(worst_oracle, std::fabs(o / exact - 1.0));
        }
    }
    const double secs = sw.seconds();
    const bool pass = worst_asym <= 1e-12 && worst_oracle <= 1e-8 && secs < 5.0;
    report(1, "gaussian-exactness", pass,
           fmt("max rel err: asym %.2e (tol 1e-12), oracle %.2e (tol 1e-8)",
               worst_asym, worst_oracle),
           secs);
}

// --------------------------------------------------------------------------
// 2. Stable closed form.  The corrected display is
//      (2 pi a (a-1))^{-1/2} t^{-1/(2(a-1))} (-x/a)^{(2-a)/(2(a-1))}
//          * exp{ -(a-1) t^{-1/(a-1)} (-x/a)^{a/(a-1)} };
//    the as-printed form swaps the powers on t and (-x/a).  The two coincide
//    only at t = 1, -x = a; the deviation of the printed form is reported.
void criterion_2() {
    Stopwatch sw;
    double worst = 0.0, printed_dev = 0.0;
    for (double alpha : {1.2, 1.5, 1.8}) {
        ExponentSuite s(fixtures::stable(alpha));
        const double am1 = alpha - 1.0;
        const double A = 1.0 / std::sqrt(2.0 * kPi * alpha * am1);
        for (double t : log_pts(0.6, 1.8, 20)) {
            for (double m : log_pts(0.1, 1.6, 20)) {
                const double x = -alpha * m;
                const double log_pref = std::log(A) - std::log(t) / (2.0 * am1) +
                                        (2.0 - alpha) / (2.0 * am1) * std::log(m);
                const double expo = am1 * std::pow(t, -1.0 / am1) *
                                    std::pow(m, alpha / am1);
                const double log_closed = log_pref - expo;
                const double got = log_asym_density(s, t, x);
                worst = std::max(worst, std::fabs(std::expm1(got - log_closed)));
                // as-printed prefactor: t^{(2-a)/(2(a-1))} (-x/a)^{-a/(2(a-1))}
                const double log_printed = std::log(A) +
                                           (2.0 - alpha) / (2.0 * am1) * std::log(t) -
                                           alpha / (2.0 * am1) * std::log(m) - expo;
                printed_dev = std::max(printed_dev,
                                       std::fabs(std::expm1(log_printed - log_closed)));
            }
        }
    }
    const double secs = sw.seconds();
    const bool pass = worst <= 1e-10 && secs < 10.0;
    report(2, "stable-closed-form", pass,
           fmt("max rel err vs corrected form %.2e (tol 1e-10); as-printed "
               "power placement deviates by up to %.2e",
               worst, printed_dev),
           secs);
}

// --------------------------------------------------------------------------
// 3. Saddle-point convergence: oracle/asym ratio approaches 1 as the hardness
//    grows, with the pinned thresholds at 1e3 and 1e5.
void criterion_3() {
    Stopwatch sw;
    double worst_1e3 = 0.0, worst_1e5 = 0.0;
    std::ostringstream trail;
    const std::vector<LevyModel> models = {fixtures::stable15(), fixtures::tempered15()};
    for (const auto& model : models) {
        ExponentSuite s(model);
        for (double target : {1e3, 3e3, 1e4, 1e5, 3e5}) {
            const double w = s.big_phi_inv(target);
            const double x = -s.phi(w, 1);
            const double ratio =
                std::exp(log_density_oracle(s, 1.0, x) - log_asym_density(s, 1.0, x));
            const double h = saddle_w(s, 1.0, x).hardness;
            const double dev = std::fabs(ratio - 1.0);
            if (h >= 1e3) worst_1e3 = std::max(worst_1e3, dev);
            if (h >= 1e5) worst_1e5 = std::max(worst_1e5, dev);
        }
    }
    const double secs = sw.seconds();
    const bool pass = worst_1e3 < 0.05 && worst_1e5 < 0.01 && secs < 120.0;
    report(3, "asymptotic-convergence", pass,
           fmt("max |ratio-1|: %.2e above hardness 1e3 (tol 0.05), %.2e above "
               "1e5 (tol 0.01)",
               worst_1e3, worst_1e5),
           secs);
}

// --------------------------------------------------------------------------
// 4. Oracle self-certification: contour independence plus unit total mass.
//    Total mass is audited as F(X) + t nubar(X) where X is far enough out
//    that the first-jump completion error is provably below the tolerance.
double completion_cut(const ExponentSuite& s, double t) {
    const LevyModel& m = s.model();
    if (m.jumps.empty()) return 7.0 * m.sigma * std::sqrt(2.0 * t);
    bool reciprocal = false, exponential = false;
    for (const auto& c : m.jumps.components) {
        reciprocal = reciprocal || std::holds_alternative<StableBoundaryJumps>(c);
        exponential = exponential || std::holds_alternative<TemperedStableJumps>(c) ||
                      std::holds_alternative<TruncatedStableJumps>(c);
    }
    if (reciprocal) return 3.0e4 * t;  // t nubar = 1/(3e4); correction O(ln X / X)
    if (exponential) {
        double X = 5.0;
        while (t * jump_tail(m, X) > 3e-9 && X < 1e4) X *= 1.25;
        return X;
    }
    // Polynomial tails: pick X so the estimated first-jump correction
    // t nubar(X) * (X Phi^{-1}(1/t))^{alpha-2} is ~3e-8.
    const double alpha = m.declared_alpha.value_or(1.5);
    const double coef =
        t * jump_tail(m, 1.0) * std::pow(s.big_phi_inv(1.0 / t), alpha - 2.0);
    return std::sqrt(coef / 3e-8);
}

void criterion_4() {
    Stopwatch sw;
    const std::vector<std::pair<const char*, LevyModel>> fixtures_list = {
        {"brownian", fixtures::brownian()},
        {"stable-1.2", fixtures::stable(1.2)},
        {"stable-1.5", fixtures::stable15()},
        {"stable-1.8", fixtures::stable(1.8)},
        {"tempered", fixtures::tempered15()},
        {"log-boundary", fixtures::boundary()},
        {"mixture", fixtures::stable_plus_brownian()},
    };
    double worst_cc = 0.0, worst_mass = 0.0, worst_budget_ratio = 0.0;
    int min_cert = 21, pooled_cert = 0;
    std::string worst_mass_at = "-";
    for (const auto& [name, model] : fixtures_list) {
        ExponentSuite s(model);
        for (double t : {0.1, 1.0}) {
            const double scale = s.big_phi_inv(1.0 / t);
            int cert = 0;
            for (double xi : lin_pts(-4.0, 4.0, 21)) {
                OracleConfig cfg;
                cfg.rel_tol = 1e-10;
                const auto cc = oracle_cross_contour(s, t, xi / scale, cfg);
                if (cc.certified) {
                    ++cert;
                    worst_cc = std::max(worst_cc, cc.discrepancy);
                } else {
                    // A route that reports a budget above 1e-8 has not
                    // converged to certification precision at this point
                    // (extreme-tail cancellation on the w = 0 contour); the
                    // two values still have to agree within the combined
                    // self-reported budget, which keeps the indicators honest.
                    worst_budget_ratio = std::max(
                        worst_budget_ratio,
                        cc.discrepancy /
                            (cc.budget_saddle + cc.budget_psi + 1e-12));
                }
            }
            min_cert = std::min(min_cert, cert);
            pooled_cert += cert;
            const double X = completion_cut(s, t);
            const double total =
                distribution_oracle(s, t, X) + t * jump_tail(model, X);
            if (std::fabs(total - 1.0) > worst_mass) {
                worst_mass = std::fabs(total - 1.0);
                worst_mass_at = std::string(name) + fmt(" t=%.1f X=%.3g", t, X);
            }
        }
    }
    const double secs = sw.seconds();
    const bool pass = worst_cc < 1e-8 && min_cert >= 19 && pooled_cert >= 285 &&
                      worst_budget_ratio <= 1.0 && worst_mass <= 1e-6 &&
                      secs < 120.0;
    report(4, "oracle-self-certification", pass,
           fmt("certified cross-contour max %.2e (tol 1e-8; coverage %.0f/294, "
               "min %.0f/21",
               worst_cc, double(pooled_cert), double(min_cert)) +
               fmt(", rest within budget x%.2g); |mass-1| max %.2e (tol 1e-6, at ",
                   worst_budget_ratio, worst_mass) +
               worst_mass_at + ")",
           secs);
}

// --------------------------------------------------------------------------
// 5. Exact-constant inequalities across the fixture families; the sup of
//    x phi' / phi must equal alpha exactly for the pure-power fixtures.
void criterion_5() {
    Stopwatch sw;
    const std::vector<std::string> subset = {"EQ17_45_72", "EQ42", "EQ43",
                                             "COR4",       "INEQ_20", "PROP5"};
    const std::vector<std::pair<double, LevyModel>> fixtures_list = {
        {0.0, fixtures::brownian()},      {1.2, fixtures::stable(1.2)},
        {1.5, fixtures::stable15()},      {1.8, fixtures::stable(1.8)},
        {0.0, fixtures::tempered15()},    {0.0, fixtures::stable_plus_brownian()},
    };
    bool all_ok = true;
    double worst_c_dev = 0.0;
    std::string first_fail;
    for (const auto& [alpha, model] : fixtures_list) {
        ExponentSuite s(model);
        const auto reports = run_suite(s, subset);
        for (const auto& r : reports) {
            if (!r.passed || r.skipped) {
                all_ok = false;
                if (first_fail.empty())
                    first_fail = r.check_id + (r.skipped ? " skipped: " : " failed: ") +
                                 r.notes;
            }
            if (alpha > 0.0 && r.check_id == "PROP5")
                for (const auto& [k, v] : r.empirical_constants)
                    if (k == "C")
                        worst_c_dev = std::max(worst_c_dev, std::fabs(v - alpha));
        }
    }
    const double secs = sw.seconds();
    const bool pass = all_ok && worst_c_dev <= 1e-6 && secs < 180.0;
    std::string detail =
        fmt("36 fixture-check pairs green; sup(x phi'/phi) off by %.2e from the "
            "stable index (tol 1e-6)",
            worst_c_dev);
    if (!first_fail.empty()) detail = first_fail;
    report(5, "exact-constants", pass, detail, secs);
}

// --------------------------------------------------------------------------
// 6. Existence-constant stability: realized bands of every approximate
//    comparison move by < 5% under one dyadic grid refinement.
void criterion_6() {
    Stopwatch sw;
    const std::vector<std::string> subset = {"COR2", "EQ44",  "EQ63",  "PROP7",
                                             "PROP8", "PROP10", "REM2", "REM5"};
    const std::vector<LevyModel> models = {fixtures::stable(1.2), fixtures::stable15(),
                                           fixtures::stable(1.8), fixtures::tempered15()};
    bool all_ok = true;
    double worst_drift = 0.0;
    std::vector<int> live(subset.size(), 0);
    std::string note;
    for (const auto& model : models) {
        ExponentSuite s(model);
        GridSpec coarse;  // defaults: 64 points per decade
        GridSpec fine = coarse;
        fine.points_per_decade = 128;
        const auto a = run_suite(s, subset, coarse);
        const auto b = run_suite(s, subset, fine);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].skipped != b[i].skipped) all_ok = false;
            if (a[i].skipped) continue;
            live[i] += 1;
            if (!a[i].passed || !b[i].passed) {
                all_ok = false;
                if (note.empty()) note = a[i].check_id + " failed: " + a[i].notes;
            }
            const double drift = std::fabs(b[i].worst_ratio / a[i].worst_ratio - 1.0);
            worst_drift = std::max(worst_drift, drift);
        }
    }
    for (std::size_t i = 0; i < live.size(); ++i)
        if (live[i] == 0) {
            all_ok = false;
            if (note.empty()) note = subset[i] + " ran on no fixture";
        }
    const double secs = sw.seconds();
    const bool pass = all_ok && worst_drift < 0.05;
    report(6, "band-stability", pass,
           note.empty()
               ? fmt("max band drift %.2e across one dyadic refinement (tol 0.05)",
                     worst_drift)
               : note,
           secs);
}

// --------------------------------------------------------------------------
// 7. Three-regime sandwich at desk scale for the stable fixture.
void criterion_7() {
    Stopwatch sw;
    ExponentSuite s(fixtures::stable15());
    OracleConfig cfg;
    cfg.rel_tol = 1e-7;
    Band overall, per[3];
    for (double t : {0.05, 0.2, 1.0}) {
        const double scale = s.phi_inv(1.0 / t);
        for (double xi : lin_pts(-8.0, 8.0, 121)) {
            const double x = xi / scale;
            const auto env = envelope(s, t, x);
            const double p = density_oracle(s, t, x, cfg).value;
            const double r = p / env.value;
            overall.add(r);
            per[static_cast<int>(env.regime.tag)].add(r);
        }
    }
    const double secs = sw.seconds();
    const double worst_regime =
        std::max({per[0].ratio(), per[1].ratio(), per[2].ratio()});
    const bool pass =
        overall.ratio() < 100.0 && worst_regime < 20.0 && secs < 300.0;
    report(7, "three-regime-sandwich", pass,
           fmt("oracle/envelope spread: overall %.1f (tol 100), worst regime %.1f "
               "(tol 20)",
               overall.ratio(), worst_regime),
           secs);
}

// --------------------------------------------------------------------------
// 8. Right-tail law: p/(t nu(x)) in [1/2, 2] beyond the gate, drifting to 1.
void criterion_8() {
    Stopwatch sw;
    ExponentSuite s(fixtures::stable15());
    OracleConfig cfg;
    cfg.rel_tol = 1e-7;
    struct Pt {
        double rho, ratio;
    };
    std::vector<Pt> pts;
    for (double t : {0.05, 0.2, 1.0}) {
        const double scale = s.big_phi_inv(1.0 / t);
        for (double rho : log_pts(4.2, 80.0, 25)) {
            const double x = rho / scale;
            const double ratio =
                density_oracle(s, t, x, cfg).value / tail_lower_shape(s, t, x);
            pts.push_back({rho, ratio});
        }
    }
    Band band;
    for (const auto& p : pts) band.add(p.ratio);
    std::sort(pts.begin(), pts.end(),
              [](const Pt& a, const Pt& b) { return a.rho < b.rho; });
    const std::size_t dec = pts.size() / 10;
    double mean = 0.0;
    for (std::size_t i = pts.size() - dec; i < pts.size(); ++i) mean += pts[i].ratio;
    mean /= static_cast<double>(dec);
    const double secs = sw.seconds();
    const bool pass = band.mn >= 0.5 && band.mx <= 2.0 && mean >= 0.8 && mean <= 1.25;
    report(8, "tail-law", pass,
           fmt("p/(t nu): range [%.3f, %.3f] (tol [0.5, 2]), last-decile mean %.3f "
               "(tol [0.8, 1.25])",
               band.mn, band.mx, mean),
           secs);
}

// --------------------------------------------------------------------------
// 9. Bulk flatness: p/phi^{-1}(1/t) stays within a single decade on |xi| <= 1.
void criterion_9() {
    Stopwatch sw;
    ExponentSuite s(fixtures::stable15());
    OracleConfig cfg;
    cfg.rel_tol = 1e-7;
    Band band;
    for (double t : {0.05, 0.2, 1.0}) {
        const double scale = s.phi_inv(1.0 / t);
        for (double xi : lin_pts(-1.0, 1.0, 21))
            band.add(density_oracle(s, t, xi / scale, cfg).value / scale);
    }
    const double secs = sw.seconds();
    const bool pass = band.ratio() < 10.0;
    report(9, "bulk-band", pass,
           fmt("p/phi^{-1}(1/t) spread %.2f on |xi| <= 1 (tol 10)", band.ratio()),
           secs);
}

// --------------------------------------------------------------------------
// 10. Logarithmic fixture: the asymptotic equals the closed form driven by
//     w = exp(-x-1) at t = 1; the as-printed variant (reciprocal root, no
//     time factor) is reported for comparison.
void criterion_10() {
    Stopwatch sw;
    ExponentSuite s(fixtures::boundary());
    double worst = 0.0, printed_dev = 0.0;
    for (double x : lin_pts(-6.0, -0.5, 21)) {
        const double w = std::exp(-x - 1.0);
        const double truth = std::sqrt(w / (2.0 * kPi)) * std::exp(-w);
        const double got = asym_density(s, 1.0, x).value;
        worst = std::max(worst, std::fabs(got / truth - 1.0));
        const double printed = std::exp(-w) / std::sqrt(2.0 * kPi * w);
        printed_dev = std::max(printed_dev, std::fabs(printed / truth - 1.0));
    }
    const double secs = sw.seconds();
    const bool pass = worst <= 1e-12;
    report(10, "log-fixture-formula", pass,
           fmt("max rel err vs sqrt(w/2pi) e^{-w}: %.2e (tol 1e-12); reciprocal-root "
               "variant deviates by up to %.2e",
               worst, printed_dev),
           secs);
}

}  // namespace

int main() {
    std::printf("acceptance: transition-density library certification\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
