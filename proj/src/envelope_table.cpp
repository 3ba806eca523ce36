#include "spd/envelope_table.hpp"

#include <algorithm>
#include <cmath>

#include "spd/errors.hpp"

namespace spd {
namespace {

constexpr double kLn10 = 2.302585092994045684;
// Overflow guard on the argument when chasing a level upward.
constexpr double kMaxLogR = 345.0;   // r ~ 1e150
constexpr double kMinLogR = -345.0;  // r ~ 1e-150
constexpr std::size_t kMaxNodes = 4'000'000;

}  // namespace

MonotoneEnvelope::MonotoneEnvelope(std::function<double(double)> f, int nodes_per_decade)
    : f_(std::move(f)), step_(kLn10 / std::max(nodes_per_decade, 8)) {}

std::shared_ptr<const MonotoneEnvelope::Table> MonotoneEnvelope::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_;
}

std::shared_ptr<const MonotoneEnvelope::Table>
MonotoneEnvelope::ensure_covers(double r_lo, double r_hi) const {
    if (!(r_lo > 0.0) || !(r_hi >= r_lo)) throw RangeError("envelope arguments must be positive");
    const double llo = std::max(std::log(r_lo), kMinLogR);
    const double lhi = std::min(std::log(r_hi), kMaxLogR);
    // Grid nodes sit at integer multiples of step_ so extensions align.
    const long k_lo = static_cast<long>(std::floor(llo / step_));
    const long k_hi = static_cast<long>(std::ceil(lhi / step_));

    std::lock_guard<std::mutex> lock(mutex_);
    const Table* old = table_.get();
    long cur_lo = 0, cur_hi = -1;
    if (old && !old->log_r.empty()) {
        cur_lo = std::lround(old->log_r.front() / step_);
        cur_hi = std::lround(old->log_r.back() / step_);
        if (k_lo >= cur_lo && k_hi <= cur_hi) return table_;
    }
    const long new_lo = old ? std::min(k_lo, cur_lo) : k_lo;
    const long new_hi = old ? std::max(k_hi, cur_hi) : k_hi;
    if (static_cast<std::size_t>(new_hi - new_lo + 1) > kMaxNodes)
        throw NumericalError("monotone envelope table exceeds the node cap");

    auto next = std::make_shared<Table>();
    next->step = step_;
    const std::size_t n = static_cast<std::size_t>(new_hi - new_lo + 1);
    next->log_r.resize(n);
    next->val.resize(n);
    next->sup.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lr = (new_lo + static_cast<long>(i)) * step_;
        next->log_r[i] = lr;
        // Reuse old evaluations where the grids overlap.
        if (old && !old->log_r.empty()) {
            const long k = new_lo + static_cast<long>(i);
            if (k >= cur_lo && k <= cur_hi) {
                next->val[i] = old->val[static_cast<std::size_t>(k - cur_lo)];
                continue;
            }
        }
        const double v = f_(std::exp(lr));
        if (!std::isfinite(v))
            throw NumericalError("envelope target returned a non-finite value");
        next->val[i] = v;
    }
    double running = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        running = std::max(running, next->val[i]);
        next->sup[i] = running;
    }
    table_ = next;
    return table_;
}

std::shared_ptr<const MonotoneEnvelope::Table>
MonotoneEnvelope::ensure_reaches(double s) const {
    auto snap = snapshot();
    if (!snap) snap = ensure_covers(0.1, 10.0);
    while (snap->sup.back() < s) {
        const double top = std::exp(snap->log_r.back());
        if (snap->log_r.back() >= kMaxLogR - 1.0)
            throw NoBracket("envelope never attains the requested level below the overflow guard");
        snap = ensure_covers(std::exp(snap->log_r.front()), top * 10.0);
    }
    return snap;
}

double MonotoneEnvelope::star(double r) const {
    if (!(r > 0.0)) throw RangeError("envelope argument must be positive");
    // Cover [r_down, r] where r_down is far enough below that the unseen
    // prefix (0, r_down] cannot contribute to the sup (f(0+) = 0 for all
    // envelope targets; extend until the low-edge values are negligible).
    auto snap = ensure_covers(r / 10.0, r);
    for (int guard = 0; guard < 24; ++guard) {
        const double total = snap->sup.back();
        if (!(snap->val.front() > 1e-10 * std::max(total, 1e-300))) break;
        if (snap->log_r.front() <= kMinLogR + 1.0) break;
        snap = ensure_covers(std::exp(snap->log_r.front()) / 100.0, r);
    }
    const double lr = std::log(r);
    // Index of the last node <= r.
    const long k0 = std::lround(snap->log_r.front() / step_);
    long i = static_cast<long>(std::floor(lr / step_ + 1e-9)) - k0;
    i = std::clamp(i, 0L, static_cast<long>(snap->log_r.size()) - 1);
    double best = snap->sup[static_cast<std::size_t>(i)];
    // Sample the partial cell (node_i, r].
    const double lnode = snap->log_r[static_cast<std::size_t>(i)];
    if (lr > lnode) {
        best = std::max(best, f_(r));
        best = std::max(best, f_(std::exp(0.5 * (lnode + lr))));
    }
    return best;
}

double MonotoneEnvelope::inverse(double s) const {
    if (!std::isfinite(s)) throw RangeError("envelope level must be finite");
    auto snap = ensure_reaches(s);
    // Extend downward until the level is bracketed from below.
    while (snap->sup.front() > s) {
        if (snap->log_r.front() <= kMinLogR + 1.0)
            throw RangeError("level lies below the envelope on the probed range");
        snap = ensure_covers(std::exp(snap->log_r.front()) / 10.0,
                             std::exp(snap->log_r.back()));
    }
    // Last grid index with sup <= s  (sup is nondecreasing).
    const auto& sup = snap->sup;
    std::size_t lo = 0, hi = sup.size() - 1;
    if (sup[hi] <= s) return std::exp(snap->log_r[hi]);  // right edge of table
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (sup[mid] <= s ? lo : hi) = mid;
    }
    // Boundary lies in (node_lo, node_hi]; bisect on the pointwise running sup.
    double a = snap->log_r[lo], b = snap->log_r[hi];
    const double base = sup[lo];
    for (int it = 0; it < 64 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double v = std::max(base, f_(std::exp(m)));
        (v <= s ? a : b) = m;
    }
    return std::exp(a);
}

}  // namespace spd
