#pragma once

// Executable certification catalog: one check per proven inequality or
// equivalence of the Laplace-exponent calculus and the density bounds.  Each
// check probes a log grid, classifies as passed / failed / skipped (a skip
// names the hypothesis that the model does not satisfy), and reports the
// realized constants.
//
// Two kinds of assertions:
//   * exact-constant checks (the literature pins the constant: 2, 1/24, e,
//     sqrt(lambda), lambda^2, monotonicity with constant 1) are asserted with
//     relative slack `rel_slack`;
//   * existence-constant checks assert that the realized ratio band is finite
//     and grid-stable (extrema move < 5% when the grid is dyadically
//     coarsened), and report the band.

#include <string>
#include <utility>
#include <vector>

#include "spd/exponents.hpp"

namespace spd {

struct GridSpec {
    double lo = 0.0;  // 0 = automatic: max(x0, 1e-3)
    double hi = 1e3;
    int points_per_decade = 64;
    // Horizon fractions for time-dependent checks; scaled into (0, 1/Phi(x0))
    // when the model has a finite horizon, absolute times otherwise.
    std::vector<double> time_fractions = {0.05, 0.2, 1.0};
    double rel_slack = 1e-9;      // slack for exact-constant assertions
    double oracle_rel_tol = 1e-7; // inversion tolerance for density-backed checks
};

struct CheckReport {
    std::string check_id;
    std::string grid;    // human-readable description of the probed arguments
    bool passed = false;
    bool skipped = false;
    // Normalized worst-case statistic: for exact checks the largest margin
    // (LHS - RHS)/scale (passing means <= rel_slack); for band checks the
    // realized max/min ratio.  NaN for skipped checks.
    double worst_ratio = 0.0;
    std::vector<std::pair<std::string, double>> empirical_constants;
    std::string notes;   // for skips: the failed hypothesis, verbatim
};

// All known check identifiers, in the canonical (lexicographic) report order.
const std::vector<std::string>& check_catalog();

// Runs one check.  Unknown ids raise GridError; numerical failures inside a
// check propagate.
CheckReport run_check(const ExponentSuite& suite, const std::string& check_id,
                      const GridSpec& grid = {});

// Runs a subset (empty = the full catalog) and returns reports sorted by
// check_id.  Checks are independent; failures do not stop the remainder.
std::vector<CheckReport> run_suite(const ExponentSuite& suite,
                                   const std::vector<std::string>& subset = {},
                                   const GridSpec& grid = {});

// True iff no report failed (skipped reports do not count as failures).
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace spd
