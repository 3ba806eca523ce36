// spd: transition densities and the Laplace-exponent calculus for spectrally
// positive Lévy models of unbounded variation.
//
// Subcommands:
//   spd exponent --config m.json --grid a:b:n[,log] --what phi,phi2,...  [--out f.csv]
//   spd density  --config m.json --t <t> --x-grid a:b:n[,log]
//                [--method asym|oracle|envelope|all] [--rel-tol eps] [--out f.csv]
//   spd check    --config m.json [--suite all | ID,ID,...] [--report out.json]
//                [--points-per-decade n]
//   spd scaling  --config m.json --target phi|phi_dd|re_psi|Phi [--lo a] [--hi b]
//
// Numbers are serialized with 17 significant digits, so every CSV value
// round-trips to the exact binary64 computed; identical config and build give
// byte-identical output.  SPD_THREADS caps sweep parallelism.  Exit codes:
// 0 ok, 2 schema error, 3 numerical failure (including failed checks),
// 4 hypothesis violation; failures emit one machine-readable JSON object on
// standard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "../vendor/json.hpp"
#include "spd/envelopes.hpp"
#include "spd/errors.hpp"
#include "spd/exponents.hpp"
#include "spd/fixtures.hpp"
#include "spd/inversion.hpp"
#include "spd/model_json.hpp"
#include "spd/sweep.hpp"
#include "spd/validation.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "a:b:n" with an optional ",log" suffix -> strictly increasing grid.
std::vector<double> parse_grid(const std::string& text) {
    std::string core = text;
    bool log_spaced = false;
    if (const auto pos = text.rfind(','); pos != std::string::npos) {
        const std::string suffix = text.substr(pos + 1);
        if (suffix == "log")
            log_spaced = true;
        else if (suffix != "lin")
            throw spd::GridError("grid suffix must be 'log' or 'lin', got '" +
                                 suffix + "'");
        core = text.substr(0, pos);
    }
    double a = 0.0, b = 0.0;
    long n = 0;
    int consumed = -1;
    if (std::sscanf(core.c_str(), "%lf:%lf:%ld%n", &a, &b, &n, &consumed) != 3 ||
        consumed != static_cast<int>(core.size()))
        throw spd::GridError("grid must be 'a:b:n[,log]', got '" + text + "'");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw spd::GridError("grid endpoints must be finite");
    if (n < 1 || n > 10'000'000) throw spd::GridError("grid size out of range");
    if (n == 1) {
        if (a != b) throw spd::GridError("single-point grid needs a == b");
        return {a};
    }
    if (!(a < b)) throw spd::GridError("grid needs a < b");
    if (log_spaced && !(a > 0.0))
        throw spd::GridError("log grid needs a > 0");
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (log_spaced) {
        const double la = std::log(a), lb = std::log(b);
        for (long i = 0; i < n; ++i)
            xs[static_cast<std::size_t>(i)] =
                std::exp(la + (lb - la) * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
    } else {
        for (long i = 0; i < n; ++i)
            xs[static_cast<std::size_t>(i)] =
                a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return xs;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutputSink(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw spd::SchemaError("cannot open output file '" + path + "'");
        os = &file;
    }
};

int run_exponent(const spd::ExponentSuite& suite, const std::string& grid_s,
                 const std::string& what_s, const std::string& out_path) {
    const auto xs = parse_grid(grid_s);
    const auto names = split_csv(what_s);
    if (names.empty()) throw spd::GridError("--what needs at least one functional");
    const auto cols = spd::functional_sweep(suite, names, xs);
    OutputSink sink(out_path);
    *sink.os << "x";
    for (const auto& n : names) *sink.os << "," << n;
    *sink.os << "\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        *sink.os << fmt17(xs[i]);
        for (std::size_t c = 0; c < cols.size(); ++c)
            *sink.os << "," << fmt17(cols[c][i]);
        *sink.os << "\n";
    }
    return 0;
}

int run_density(const spd::ExponentSuite& suite, double t, const std::string& grid_s,
                const std::string& method_s, double rel_tol,
                const std::string& out_path) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw spd::RangeError("--t must be positive and finite");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw spd::SchemaError("--rel-tol must lie in (0, 1)");
    const auto xs = parse_grid(grid_s);
    const auto method = spd::parse_sweep_method(method_s);
    spd::OracleConfig cfg;
    cfg.rel_tol = rel_tol;
    if (method == spd::SweepMethod::envelope) {
        // Strict mode: the envelope's hypotheses are model/t-level, so check
        // them once up front and map a violation to exit code 4.
        spd::envelope(suite, t, 0.0);
    }
    const auto rows = spd::density_sweep(suite, t, xs, method, cfg);
    OutputSink sink(out_path);
    const auto regime_cell = [](const spd::DensityRow& r) -> std::string {
        if (r.regime < 0) return "none";
        return spd::regime_name(static_cast<spd::RegimeTag>(r.regime));
    };
    switch (method) {
        case spd::SweepMethod::asym:
            *sink.os << "x,p_asym,hardness,w\n";
            for (const auto& r : rows)
                *sink.os << fmt17(r.x) << "," << fmt17(r.p_asym) << ","
                         << fmt17(r.hardness) << "," << fmt17(r.w) << "\n";
            break;
        case spd::SweepMethod::oracle:
            *sink.os << "x,p_oracle,err_bound,contour_w,nodes_used\n";
            for (const auto& r : rows)
                *sink.os << fmt17(r.x) << "," << fmt17(r.p_oracle) << ","
                         << fmt17(r.err_bound) << "," << fmt17(r.contour_w) << ","
                         << r.nodes_used << "\n";
            break;
        case spd::SweepMethod::envelope:
            *sink.os << "x,regime,envelope_value\n";
            for (const auto& r : rows)
                *sink.os << fmt17(r.x) << "," << regime_cell(r) << ","
                         << fmt17(r.envelope_value) << "\n";
            break;
        case spd::SweepMethod::all:
            *sink.os << "x,p_oracle,p_asym,envelope_value,regime,"
                        "ratio_oracle_env,ratio_oracle_asym\n";
            for (const auto& r : rows)
                *sink.os << fmt17(r.x) << "," << fmt17(r.p_oracle) << ","
                         << fmt17(r.p_asym) << "," << fmt17(r.envelope_value) << ","
                         << regime_cell(r) << ","
                         << fmt17(r.p_oracle / r.envelope_value) << ","
                         << fmt17(r.p_oracle / r.p_asym) << "\n";
            break;
    }
    // A grid where no requested route produced a single value is an error,
    // not an empty success.
    bool any_value = false;
    int worst_kind = 0;
    for (const auto& r : rows) {
        if (r.error_kind == 0) any_value = true;
        worst_kind = std::max(worst_kind, r.error_kind);
    }
    if (!any_value && worst_kind != 0) {
        json err{{"error",
                  {{"kind", worst_kind == 4   ? "hypothesis"
                            : worst_kind == 2 ? "schema"
                                              : "numerical"},
                   {"message", "every grid point failed: " + rows.front().error}}}};
        std::cerr << err.dump() << "\n";
        return worst_kind;
    }
    return 0;
}

json report_to_json(const spd::CheckReport& r) {
    json constants = json::object();
    for (const auto& [name, value] : r.empirical_constants) constants[name] = value;
    return json{{"check_id", r.check_id}, {"grid", r.grid},
                {"passed", r.passed},     {"skipped", r.skipped},
                {"worst_ratio", r.worst_ratio}, {"empirical_constants", constants},
                {"notes", r.notes}};
}

int run_checks(const spd::ExponentSuite& suite, const std::string& suite_s,
               const std::string& report_path, int ppd) {
    std::vector<std::string> ids;
    if (suite_s != "all") {
        ids = split_csv(suite_s);
        const auto& known = spd::check_catalog();
        for (const auto& id : ids)
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw spd::GridError("unknown check id '" + id + "'");
    }
    spd::GridSpec grid;
    if (ppd > 0) grid.points_per_decade = ppd;
    const auto reports = spd::run_suite(suite, ids, grid);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    if (report_path.empty()) {
        std::cout << arr.dump(2) << "\n";
    } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw spd::SchemaError("cannot open report file '" + report_path + "'");
        f << arr.dump(2) << "\n";
        for (const auto& r : reports) {
            const char* verdict = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
            std::printf("%-4s %-14s %s\n", verdict, r.check_id.c_str(),
                        r.notes.c_str());
        }
    }
    if (spd::all_passed(reports)) return 0;
    json err{{"error", {{"kind", "numerical"},
                        {"message", "one or more certification checks failed"}}}};
    std::cerr << err.dump() << "\n";
    return 3;
}

int run_scaling(const spd::ExponentSuite& suite, const std::string& target_s,
                double lo, double hi) {
    spd::ScalingTarget target;
    if (target_s == "phi")
        target = spd::ScalingTarget::phi;
    else if (target_s == "phi_dd")
        target = spd::ScalingTarget::phi_dd;
    else if (target_s == "re_psi")
        target = spd::ScalingTarget::re_psi;
    else if (target_s == "Phi")
        target = spd::ScalingTarget::Phi;
    else
        throw spd::GridError("unknown scaling target '" + target_s +
                             "' (expected phi, phi_dd, re_psi, or Phi)");
    if (lo <= 0.0) lo = std::max(1e-3, 10.0 * suite.model().x0);
    if (hi <= 0.0) hi = std::max(1e3, 1e4 * lo);
    if (!(lo < hi)) throw spd::GridError("scaling probe range needs lo < hi");
    const auto rep = suite.scaling_report(target, lo, hi);
    json out{{"target", target_s},
             {"probe_lo", rep.probe_lo},
             {"probe_hi", rep.probe_hi},
             {"alpha_hat", rep.alpha_hat},
             {"beta_hat", rep.beta_hat},
             {"c_hat", rep.c_hat},
             {"C_hat", rep.C_hat}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int classify(const std::exception& e) {
    if (dynamic_cast<const spd::HypothesisViolation*>(&e)) return 4;
    if (dynamic_cast<const spd::SchemaError*>(&e)) return 2;
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transition densities for spectrally positive Levy processes"};
    app.require_subcommand(1);

    std::string config_path, out_path, grid_s, what_s = "phi,phi1,phi2";
    std::string x_grid_s, method_s = "all", suite_s = "all", report_path;
    std::string target_s;
    double t = 1.0, rel_tol = 1e-9, lo = 0.0, hi = 0.0;
    int ppd = 0;

    auto* exponent = app.add_subcommand("exponent", "tabulate exponent functionals");
    exponent->add_option("--config", config_path, "model JSON file")->required();
    exponent->add_option("--grid", grid_s, "a:b:n[,log]")->required();
    exponent->add_option("--what", what_s, "comma list of functionals");
    exponent->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* density = app.add_subcommand("density", "evaluate transition densities");
    density->add_option("--config", config_path, "model JSON file")->required();
    density->add_option("--t", t, "time horizon")->required();
    density->add_option("--x-grid", x_grid_s, "a:b:n[,log]")->required();
    density->add_option("--method", method_s, "asym | oracle | envelope | all");
    density->add_option("--rel-tol", rel_tol, "oracle relative tolerance");
    density->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* check = app.add_subcommand("check", "run the certification catalog");
    check->add_option("--config", config_path, "model JSON file")->required();
    check->add_option("--suite", suite_s, "'all' or comma list of check ids");
    check->add_option("--report", report_path, "JSON report path (default stdout)");
    check->add_option("--points-per-decade", ppd, "grid density override");

    auto* scaling = app.add_subcommand("scaling", "empirical scaling indices");
    scaling->add_option("--config", config_path, "model JSON file")->required();
    scaling->add_option("--target", target_s, "phi | phi_dd | re_psi | Phi")
        ->required();
    scaling->add_option("--lo", lo, "probe range lower end");
    scaling->add_option("--hi", hi, "probe range upper end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"kind", "schema"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        const spd::LevyModel model = spd::parse_model_file(config_path);
        const spd::ExponentSuite suite(model);
        if (exponent->parsed())
            return run_exponent(suite, grid_s, what_s, out_path);
        if (density->parsed())
            return run_density(suite, t, x_grid_s, method_s, rel_tol, out_path);
        if (check->parsed()) return run_checks(suite, suite_s, report_path, ppd);
        if (scaling->parsed()) return run_scaling(suite, target_s, lo, hi);
        return 2;
    } catch (const std::exception& e) {
        const int kind = classify(e);
        json err{{"error",
                  {{"kind", kind == 4   ? "hypothesis"
                            : kind == 2 ? "schema"
                                        : "numerical"},
                   {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return kind;
    }
}
