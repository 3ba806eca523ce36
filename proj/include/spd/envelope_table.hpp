#pragma once

// Monotone envelopes of numerically-evaluated functions on (0, inf).
//
// For f >= 0 with f(0+) = 0 that is "essentially increasing", tabulate f on a
// log grid and serve
//   star(r)    = sup_{0 < u <= r} f(u)      (running sup / least nondecreasing
//                                            majorant on the probed range)
//   inverse(s) = sup{r > 0 : star(r) <= s}  (right-continuous generalized
//                                            inverse)
// which satisfy star(inverse(s)) = s for s in the closure of the range when
// star is continuous, and inverse(star(r)) >= r everywhere.
//
// The table is built lazily around the queried arguments and extended in both
// directions on demand.  Refinement follows an exclusive-update discipline:
// readers grab an immutable snapshot under a short lock; writers install a
// new snapshot.  Evaluations of f must themselves be thread-safe.

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace spd {

class MonotoneEnvelope {
public:
    // nodes_per_decade controls the log-grid density (default 512).
    MonotoneEnvelope(std::function<double(double)> f, int nodes_per_decade = 512);

    // Running sup over (0, r].  r > 0.
    double star(double r) const;

    // sup{r : star(r) <= s}.  Throws RangeError when s is below the infimum of
    // star over the extendable range, NoBracket when s is not attained before
    // the overflow guard.
    double inverse(double s) const;

    // Raw f(r), bypassing the envelope.
    double raw(double r) const { return f_(r); }

private:
    struct Table {
        std::vector<double> log_r;  // strictly increasing, uniform spacing
        std::vector<double> sup;    // running sup of f over grid points <= i
        std::vector<double> val;    // f at the grid points
        double step = 0.0;
    };

    std::shared_ptr<const Table> snapshot() const;
    // Ensure the table covers [r_lo, r_hi]; returns the covering snapshot.
    std::shared_ptr<const Table> ensure_covers(double r_lo, double r_hi) const;
    // Extend the table upward until sup >= s or the guard trips; returns snapshot.
    std::shared_ptr<const Table> ensure_reaches(double s) const;

    std::function<double(double)> f_;
    double step_;
    mutable std::shared_ptr<const Table> table_;
    mutable std::mutex mutex_;
};

}  // namespace spd
