#include "spd/quadrature.hpp"

#include <numbers>

namespace spd::quad {

namespace {

// Wynn's epsilon algorithm, in-place anti-diagonal form.  push() feeds the
// next partial sum and returns the current best extrapolation (the deepest
// even-column entry of the table).
class WynnEpsilon {
public:
    double push(double s) {
        diag_.push_back(s);
        double two_back = 0.0;
        for (std::size_t j = diag_.size() - 1; j >= 1; --j) {
            const double one_back = diag_[j - 1];
            const double diff = diag_[j] - one_back;
            diag_[j - 1] = (std::fabs(diff) < 1e-300)
                               ? std::numeric_limits<double>::max()
                               : two_back + 1.0 / diff;
            two_back = one_back;
        }
        return diag_[(diag_.size() - 1) % 2];
    }

private:
    std::vector<double> diag_;
};

}  // namespace

Result<double> integrate_oscillatory_tail(const std::function<double(double)>& g,
                                          double a, double xi, Trig which,
                                          const Options& opt) {
    if (!(xi > 0.0))
        throw QuadratureFailure("oscillatory tail requires xi > 0");
    const double half = std::numbers::pi / xi;
    constexpr int kMaxPanels = 8192;

    std::size_t local_evals = 0;
    Options sub = opt;
    if (!sub.eval_counter) sub.eval_counter = &local_evals;
    sub.rel_tol = std::max(opt.rel_tol * 0.1, 1e-13);
    sub.abs_tol = 0.0;

    auto f = [&](double x) {
        const double ph = xi * x;
        return g(x) * (which == Trig::cos ? std::cos(ph) : std::sin(ph));
    };

    WynnEpsilon eps;
    double partial = 0.0;
    double est = 0.0, prev_est = 0.0;
    int stable = 0;
    for (int k = 0; k < kMaxPanels; ++k) {
        const double pa = a + k * half;
        const double pb = pa + half;
        double panel;
        try {
            // Sub-panel abs floor: far-out panels contribute nothing and need
            // no relative precision of their own.
            Options po = sub;
            po.abs_tol = 1e-4 * (opt.abs_tol + opt.rel_tol * std::fabs(est));
            panel = integrate(f, pa, pb, po).value;
        } catch (const QuadratureFailure&) {
            throw QuadratureFailure("oscillatory panel did not converge near x=" +
                                    std::to_string(pa));
        }
        partial += panel;
        prev_est = est;
        est = eps.push(partial);

        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(est));
        if (k >= 3) {
            const bool eps_ok = std::fabs(est - prev_est) <= 0.5 * tol;
            const bool raw_ok = std::fabs(panel) <= 0.1 * tol;
            stable = (eps_ok || raw_ok) ? stable + 1 : 0;
            if (stable >= 2) {
                const double err =
                    std::fabs(est - prev_est) + 0.25 * std::fabs(panel);
                return {est, err, opt.eval_counter ? 0 : local_evals};
            }
        }
        if ((opt.eval_counter ? *opt.eval_counter : local_evals) >= opt.max_evals)
            throw QuadratureFailure("oscillatory tail: evaluation cap reached");
    }
    throw QuadratureFailure("oscillatory tail: panel cap reached");
}

const std::vector<std::pair<double, double>>& gauss_legendre_32() {
    static const std::vector<std::pair<double, double>> table = [] {
        constexpr int n = 32;
        std::vector<std::pair<double, double>> t(n);
        for (int i = 1; i <= n / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 64; ++it) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (x * p1 - p2) / (x * x - 1.0);
                const double dx = p1 / pp;
                x -= dx;
                if (std::fabs(dx) < 1e-16) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * pp * pp);
            t[i - 1] = {-x, w};
            t[n - i] = {x, w};
        }
        return t;
    }();
    return table;
}

}  // namespace spd::quad
