#pragma once

// Grid sweep kernels: the density routes and the named exponent functionals,
// mapped across a grid of points.  density_sweep / functional_sweep partition
// rows across OpenMP threads (capped by the SPD_THREADS environment
// variable); the *_serial twins are the reference implementations the tests
// and the benchmark compare against.  Rows are computed independently and
// stored by index, so the parallel kernels produce bit-identical output.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spd/density.hpp"
#include "spd/envelopes.hpp"
#include "spd/errors.hpp"
#include "spd/exponents.hpp"
#include "spd/inversion.hpp"
#include "spd/model.hpp"
#include "spd/saddlepoint.hpp"

namespace spd {

// Worker count: OpenMP's default, capped by SPD_THREADS when set.
inline int sweep_threads() {
    int n = 1;
#ifdef _OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("SPD_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = static_cast<int>(std::min(v, 1024L));
    }
    return std::max(1, n);
}

enum class SweepMethod { asym, oracle, envelope, all };

inline SweepMethod parse_sweep_method(const std::string& s) {
    if (s == "asym") return SweepMethod::asym;
    if (s == "oracle") return SweepMethod::oracle;
    if (s == "envelope") return SweepMethod::envelope;
    if (s == "all") return SweepMethod::all;
    throw GridError("unknown density method '" + s +
                    "' (expected asym, oracle, envelope, or all)");
}

struct DensityRow {
    double x = 0.0;
    // oracle route
    double p_oracle = std::numeric_limits<double>::quiet_NaN();
    double err_bound = std::numeric_limits<double>::quiet_NaN();
    double contour_w = std::numeric_limits<double>::quiet_NaN();
    std::size_t nodes_used = 0;
    // saddle-point route
    double p_asym = std::numeric_limits<double>::quiet_NaN();
    double hardness = std::numeric_limits<double>::quiet_NaN();
    double w = std::numeric_limits<double>::quiet_NaN();
    // envelope route
    double envelope_value = std::numeric_limits<double>::quiet_NaN();
    int regime = -1;    // RegimeTag index; -1 when unavailable
    std::string error;  // first per-row failure, empty when every route succeeded
    int error_kind = 0;  // 0 ok, 2 schema, 3 numerical, 4 hypothesis
};

namespace sweep_detail {

inline void note_error(DensityRow& row, int kind, const std::string& what) {
    if (row.error_kind == 0) {
        row.error_kind = kind;
        row.error = what;
    }
}

inline DensityRow density_row(const ExponentSuite& suite, double t, double x,
                              SweepMethod method, const OracleConfig& cfg) {
    DensityRow row;
    row.x = x;
    const bool want_asym = method == SweepMethod::asym || method == SweepMethod::all;
    const bool want_oracle = method == SweepMethod::oracle || method == SweepMethod::all;
    const bool want_env = method == SweepMethod::envelope || method == SweepMethod::all;
    if (want_asym) {
        try {
            const SaddleResult s = saddle_w(suite, t, x);
            row.w = s.w;
            row.hardness = s.hardness;
            row.p_asym = asym_density(suite, t, x).value;
        } catch (const NumericalError& e) {
            note_error(row, 3, e.what());
        }
    }
    if (want_oracle) {
        try {
            const DensityEstimate d = density_oracle(suite, t, x, cfg);
            row.p_oracle = d.value;
            row.err_bound = d.error_indicator;
            row.contour_w = d.contour_w;
            row.nodes_used = d.nodes_used;
        } catch (const HypothesisViolation& e) {
            note_error(row, 4, e.what());
        } catch (const SchemaError& e) {
            note_error(row, 2, e.what());
        } catch (const NumericalError& e) {
            note_error(row, 3, e.what());
        }
    }
    if (want_env) {
        try {
            const EnvelopeValue ev = envelope(suite, t, x);
            row.envelope_value = ev.value;
            row.regime = static_cast<int>(ev.regime.tag);
        } catch (const HypothesisViolation& e) {
            note_error(row, 4, e.what());
        } catch (const NumericalError& e) {
            note_error(row, 3, e.what());
        }
    }
    return row;
}

}  // namespace sweep_detail

inline std::vector<DensityRow> density_sweep_serial(const ExponentSuite& suite,
                                                    double t,
                                                    const std::vector<double>& xs,
                                                    SweepMethod method,
                                                    const OracleConfig& cfg = {}) {
    std::vector<DensityRow> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        rows[i] = sweep_detail::density_row(suite, t, xs[i], method, cfg);
    return rows;
}

inline std::vector<DensityRow> density_sweep(const ExponentSuite& suite, double t,
                                             const std::vector<double>& xs,
                                             SweepMethod method,
                                             const OracleConfig& cfg = {}) {
    std::vector<DensityRow> rows(xs.size());
    const int nt = sweep_threads();
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1)
#endif
    for (long i = 0; i < static_cast<long>(xs.size()); ++i)
        rows[static_cast<std::size_t>(i)] =
            sweep_detail::density_row(suite, t, xs[static_cast<std::size_t>(i)],
                                      method, cfg);
    return rows;
}

// Named scalar functionals available to exponent sweeps.  "psi" is the real
// part of the characteristic exponent (the part every comparison uses);
// "psi_im" exposes the imaginary part.
inline const std::vector<std::string>& functional_names() {
    static const std::vector<std::string> names = {
        "phi",     "phi1",    "phi2",    "phi3",   "psi",      "psi_re",
        "psi_im",  "K",       "h",       "Phi",    "Phi_star", "Phi_inv",
        "phi_inv", "psi_star", "psi_inv", "nu",    "nu_bar",
    };
    return names;
}

inline double eval_functional(const ExponentSuite& s, const std::string& name,
                              double x) {
    if (name == "phi") return s.phi(x);
    if (name == "phi1") return s.phi(x, 1);
    if (name == "phi2") return s.phi(x, 2);
    if (name == "phi3") return s.phi(x, 3);
    if (name == "psi" || name == "psi_re") return s.char_exponent(x).real();
    if (name == "psi_im") return s.char_exponent(x).imag();
    if (name == "K") return s.pruitt_K(x);
    if (name == "h") return s.pruitt_h(x);
    if (name == "Phi") return s.big_phi(x);
    if (name == "Phi_star") return s.big_phi_star(x);
    if (name == "Phi_inv") return s.big_phi_inv(x);
    if (name == "phi_inv") return s.phi_inv(x);
    if (name == "psi_star") return s.psi_star(x);
    if (name == "psi_inv") return s.psi_inv(x);
    if (name == "nu") return jump_density(s.model(), x);
    if (name == "nu_bar") return jump_tail(s.model(), x);
    throw GridError("unknown functional '" + name + "'");
}

namespace sweep_detail {

inline void require_known_functionals(const std::vector<std::string>& names) {
    const auto& known = functional_names();
    for (const auto& n : names)
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw GridError("unknown functional '" + n + "'");
}

inline double functional_cell(const ExponentSuite& suite, const std::string& name,
                              double x) {
    try {
        return eval_functional(suite, name, x);
    } catch (const NumericalError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace sweep_detail

// Column-major: one vector per requested name, aligned with xs.
inline std::vector<std::vector<double>> functional_sweep_serial(
    const ExponentSuite& suite, const std::vector<std::string>& names,
    const std::vector<double>& xs) {
    sweep_detail::require_known_functionals(names);
    std::vector<std::vector<double>> cols(names.size(),
                                          std::vector<double>(xs.size()));
    for (std::size_t c = 0; c < names.size(); ++c)
        for (std::size_t i = 0; i < xs.size(); ++i)
            cols[c][i] = sweep_detail::functional_cell(suite, names[c], xs[i]);
    return cols;
}

inline std::vector<std::vector<double>> functional_sweep(
    const ExponentSuite& suite, const std::vector<std::string>& names,
    const std::vector<double>& xs) {
    sweep_detail::require_known_functionals(names);
    std::vector<std::vector<double>> cols(names.size(),
                                          std::vector<double>(xs.size()));
    const long total = static_cast<long>(names.size() * xs.size());
    const int nt = sweep_threads();
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(dynamic, 8)
#endif
    for (long k = 0; k < total; ++k) {
        const std::size_t c = static_cast<std::size_t>(k) / xs.size();
        const std::size_t i = static_cast<std::size_t>(k) % xs.size();
        cols[c][i] = sweep_detail::functional_cell(suite, names[c], xs[i]);
    }
    return cols;
}

}  // namespace spd
