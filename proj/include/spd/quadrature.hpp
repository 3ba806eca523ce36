#pragma once

// Adaptive quadrature built on 15-point Gauss-Kronrod panels, templated on the
// integrand's value type (double or std::complex<double>).  Design targets that
// ruled out an off-the-shelf driver: a hard per-call evaluation cap shared
// across nested integrals, explicit log-substitution for x -> 0 singularities,
// geometric window extension for semi-infinite ranges, and half-period panel
// splitting with series acceleration for oscillatory tails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

#include "spd/errors.hpp"

namespace spd::quad {

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;           // absolute floor for the error target
    std::size_t max_evals = 1'000'000;
    std::size_t* eval_counter = nullptr;  // optional shared budget across calls
};

template <class T>
struct Result {
    T value{};
    double error = 0.0;   // estimated absolute error
    std::size_t evals = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights on [-1,1] (nonnegative half; QUADPACK dqk15)
// and the embedded 7-point Gauss weights on nodes 1,3,5,7.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double norm_of(const T& v) {
    if constexpr (std::is_same_v<T, double>) return std::fabs(v);
    else return std::abs(v);
}

template <class F>
using value_t = std::remove_cvref_t<std::invoke_result_t<F&, double>>;

// One Gauss-Kronrod panel; returns {integral, error estimate, L1 estimate}.
template <class F, class T = value_t<F>>
struct PanelOut {
    T integral;
    double error;
    double l1;
};

template <class F, class T = value_t<F>>
PanelOut<F> gk15_panel(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T resk{};      // 15-point Kronrod
    T resg{};      // 7-point Gauss
    double l1 = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kGK15Nodes[j];
        T fsum;
        if (j == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - dx);
            fsum += f(c + dx);
        }
        resk += kGK15WeightsK[j] * fsum;
        if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * fsum;
        l1 += kGK15WeightsK[j] * norm_of(fsum);
    }
    resk *= h;
    resg *= h;
    l1 *= std::fabs(h);
    // QUADPACK-style sharpened error estimate.
    const double diff = norm_of(T(resk - resg));
    double err = diff;
    if (l1 > 0.0 && diff > 0.0) {
        const double scaled = std::pow(200.0 * diff / l1, 1.5);
        err = l1 * std::min(1.0, scaled);
    }
    return {resk, err, l1};
}

}  // namespace detail

// Adaptive integration of f over the finite interval [a, b].
template <class F, class T = detail::value_t<F>>
Result<T> integrate(F&& f, double a, double b, const Options& opt = {}) {
    if (!(a < b)) return {};
    std::size_t local_evals = 0;
    std::size_t& evals = opt.eval_counter ? *opt.eval_counter : local_evals;
    const std::size_t start_evals = evals;

    struct Panel {
        double a, b, err;
        T integral;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::vector<Panel> heap;
    auto push_panel = [&](double pa, double pb) {
        auto out = detail::gk15_panel(f, pa, pb);
        evals += 15;
        if (!std::isfinite(detail::norm_of(out.integral)))
            throw QuadratureFailure("integrand not finite on [" +
                                    std::to_string(pa) + ", " + std::to_string(pb) + "]");
        heap.push_back({pa, pb, out.error, out.integral});
        std::push_heap(heap.begin(), heap.end());
        return out;
    };

    push_panel(a, b);
    while (true) {
        T total{};
        double toterr = 0.0;
        for (const auto& p : heap) {
            total += p.integral;
            toterr += p.err;
        }
        const double target =
            std::max(opt.abs_tol, opt.rel_tol * detail::norm_of(total));
        if (toterr <= target) return {total, toterr, evals - start_evals};
        if (evals >= opt.max_evals)
            throw QuadratureFailure("evaluation cap reached (err " +
                                    std::to_string(toterr) + " > target " +
                                    std::to_string(target) + ")");
        std::pop_heap(heap.begin(), heap.end());
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw QuadratureFailure("interval too small to subdivide");
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }
}

// Integration in log coordinates: \int_a^b f(x) dx with x = e^u.  Requires
// 0 < a < b < inf; the integrand must be smooth in u (power-law singularities
// at 0 become exponentials, which Gauss-Kronrod resolves cheaply).
template <class F, class T = detail::value_t<F>>
Result<T> integrate_log(F&& f, double a, double b, const Options& opt = {}) {
    auto g = [&f](double u) {
        const double x = std::exp(u);
        return f(x) * x;
    };
    return integrate(g, std::log(a), std::log(b), opt);
}

// Integral of f over (lo, hi) on the positive axis where lo may be 0 and hi may
// be +inf.  Windows grow geometrically (factor 8 in log scale) away from a
// finite anchor; extension stops once two consecutive windows contribute less
// than a fraction of the tolerance.  Integrands are assumed to decay at both
// ends (after x^k / e^{-lambda x} weighting this holds for every Levy-measure
// integral the library forms; termination is guarded by a window cap).
template <class F, class T = detail::value_t<F>>
Result<T> integrate_positive_axis(F&& f, double lo, double hi, double anchor,
                                  const Options& opt = {}) {
    constexpr double kWindow = 8.0;       // multiplicative window width
    constexpr int kMaxWindows = 256;      // 8^256 overflows any double range
    if (!(anchor > 0.0) || !std::isfinite(anchor))
        throw QuadratureFailure("integrate_positive_axis: bad anchor");
    if (hi <= lo) return {};

    std::size_t local_evals = 0;
    Options sub = opt;
    if (!sub.eval_counter) {
        sub.eval_counter = &local_evals;
    }
    // Individual windows are integrated a bit tighter than the overall goal.
    sub.rel_tol = std::max(opt.rel_tol * 0.25, 1e-14);

    T total{};
    double toterr = 0.0;
    auto add = [&](double a, double b) {
        if (!(a < b)) return 0.0;
        auto r = integrate_log(f, a, b, sub);
        total += r.value;
        toterr += r.error;
        return detail::norm_of(r.value);
    };

    const double a0 = std::max(lo, anchor / kWindow);
    const double b0 = std::min(hi, anchor * kWindow);
    add(std::min(a0, b0) == b0 ? b0 / kWindow : a0, b0);  // seed window

    // Extend upward.
    int quiet = 0;
    double b = b0;
    for (int i = 0; i < kMaxWindows && b < hi && quiet < 2; ++i) {
        const double bn = std::min(hi, b * kWindow);
        const double contrib = add(b, bn);
        const double scale = detail::norm_of(total) + opt.abs_tol;
        quiet = (contrib <= 0.05 * (opt.rel_tol * scale + opt.abs_tol)) ? quiet + 1 : 0;
        b = bn;
        if (b > 1e300) break;
    }
    // Extend downward.
    quiet = 0;
    double a = std::min(a0, b0);
    for (int i = 0; i < kMaxWindows && a > lo && quiet < 2; ++i) {
        const double an = std::max(lo, a / kWindow);
        const double contrib = (an > 0.0)
            ? add(an, a)
            : add(std::max(a / (kWindow * kWindow * kWindow), 1e-300), a);
        const double scale = detail::norm_of(total) + opt.abs_tol;
        quiet = (contrib <= 0.05 * (opt.rel_tol * scale + opt.abs_tol)) ? quiet + 1 : 0;
        a = (an > 0.0) ? an : a / (kWindow * kWindow * kWindow);
        if (a < 1e-300) break;
    }
    return {total, toterr, opt.eval_counter ? 0 : local_evals};
}

enum class Trig { cos, sin };

// \int_a^inf g(x) trig(xi x) dx for eventually monotone g with an integrable
// tail.  Half-period panels between consecutive zeros of the oscillation give
// an alternating partial-sum sequence, which Wynn's epsilon algorithm
// extrapolates; polynomial-decay tails converge where plain adaptive
// subdivision cannot.
Result<double> integrate_oscillatory_tail(const std::function<double(double)>& g,
                                          double a, double xi, Trig which,
                                          const Options& opt = {});

// Kahan-compensated accumulator for long panel sums (keeps float error flat
// where tail cancellation runs to many orders of magnitude).
template <class T>
struct KahanSum {
    T sum{};
    T carry{};
    void add(const T& v) {
        const T y = v - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Nodes/weights of the 32-point Gauss-Legendre rule on [-1,1] (computed once
// by Newton iteration on the Legendre recurrence; deterministic).
const std::vector<std::pair<double, double>>& gauss_legendre_32();

}  // namespace spd::quad
