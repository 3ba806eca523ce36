#pragma once

// Bracketed Newton for increasing functions: safe on convex/concave monotone
// targets, falls back to bisection when Newton stops contracting the bracket
// (e.g. quadrature noise in the derivative).

#include <cmath>
#include <functional>

#include "spd/errors.hpp"

namespace spd {

// Finds the root of an increasing function g with g(lo) <= 0 <= g(hi).
// dg may return non-positive garbage near the edges; any unusable Newton step
// degrades to bisection.  After 3 consecutive non-contracting Newton steps the
// solve switches to pure bisection.  abs_tol is on the argument.
template <class G, class DG>
double find_root_increasing(G&& g, DG&& dg, double lo, double hi, double abs_tol,
                            double rel_tol = 1e-13) {
    double glo = g(lo), ghi = g(hi);
    if (glo > 0.0 || ghi < 0.0)
        throw NoBracket("root bracket does not straddle a sign change");
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;

    double x = 0.5 * (lo + hi);
    int bad_newton = 0;
    for (int it = 0; it < 200; ++it) {
        const double gx = g(x);
        if (gx == 0.0) return x;
        (gx < 0.0 ? lo : hi) = x;
        if (hi - lo <= abs_tol + rel_tol * std::abs(x)) return 0.5 * (lo + hi);

        double next = 0.5 * (lo + hi);
        if (bad_newton < 3) {
            const double d = dg(x);
            if (d > 0.0 && std::isfinite(d)) {
                const double step = gx / d;
                const double cand = x - step;
                if (cand > lo && cand < hi) {
                    next = cand;
                } else {
                    ++bad_newton;
                }
            } else {
                ++bad_newton;
            }
        }
        x = next;
    }
    return 0.5 * (lo + hi);
}

// Doubles hi from `start` until pred(hi) is true; throws NoBracket past the
// overflow guard.
template <class Pred>
double expand_up(Pred&& pred, double start, double guard = 1e154) {
    double hi = start;
    while (!pred(hi)) {
        hi *= 2.0;
        if (hi > guard)
            throw NoBracket("function never crosses the target level below the overflow guard");
    }
    return hi;
}

}  // namespace spd
