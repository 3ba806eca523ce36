#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../vendor/json.hpp"
#include "spd/exponents.hpp"
#include "spd/fixtures.hpp"

using Catch::Approx;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the CLI with stderr captured to a side file.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string errfile =
        "/tmp/spd_cli_stderr_" + std::to_string(counter++) + ".txt";
    const std::string cmd =
        std::string(SPD_CLI_PATH) + " " + args + " 2>" + errfile;
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(errfile);
    std::remove(errfile.c_str());
    return r;
}

std::string data(const std::string& name) {
    return std::string(SPD_DATA_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("exponent sweep emits a lossless CSV matching the library") {
    const auto r = run_cli("exponent --config " + data("stable15.json") +
                           " --grid 1:100:9,log --what phi,Phi,psi");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 10);  // header + 9 points
    REQUIRE(rows[0] == std::vector<std::string>{"x", "phi", "Phi", "psi"});

    spd::ExponentSuite s(spd::fixtures::stable15());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double x = std::strtod(rows[i][0].c_str(), nullptr);
        // 17-significant-digit serialization round-trips binary64 exactly.
        CHECK(std::strtod(rows[i][1].c_str(), nullptr) == s.phi(x));
        CHECK(std::strtod(rows[i][2].c_str(), nullptr) == s.big_phi(x));
        CHECK(std::strtod(rows[i][3].c_str(), nullptr) == s.char_exponent(x).real());
    }
}

TEST_CASE("density sweeps carry per-method columns and are byte-stable") {
    const std::string args = "density --config " + data("stable15.json") +
                             " --t 1 --x-grid -3:-1:5 --method asym";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);  // determinism, byte for byte
    const auto rows = parse_csv(a.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"x", "p_asym", "hardness", "w"});
    CHECK(std::strtod(rows[1][3].c_str(), nullptr) == Approx(4.0).epsilon(1e-10));

    const auto all = run_cli("density --config " + data("stable15.json") +
                             " --t 1 --x-grid -2:2:5 --method all --rel-tol 1e-7");
    REQUIRE(all.code == 0);
    const auto arows = parse_csv(all.out);
    REQUIRE(arows.size() == 6);
    CHECK(arows[0][0] == "x");
    CHECK(arows[0][1] == "p_oracle");
    // The bulk rows have no saddle: the asym cell degrades to nan, the regime
    // column still names the envelope branch.
    bool saw_nan = false, saw_bulk = false;
    for (std::size_t i = 1; i < arows.size(); ++i) {
        saw_nan = saw_nan || arows[i][2] == "nan";
        for (const auto& cell : arows[i]) saw_bulk = saw_bulk || cell == "bulk";
    }
    CHECK(saw_nan);
    CHECK(saw_bulk);
}

TEST_CASE("check subcommand writes machine-readable reports") {
    const std::string report = "/tmp/spd_cli_report.json";
    std::remove(report.c_str());
    const auto r = run_cli("check --config " + data("stable15.json") +
                           " --suite INEQ_20,EQ43 --report " + report);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("INEQ_20") != std::string::npos);

    const auto doc = json::parse(slurp(report));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (const auto& item : doc) {
        CHECK(item.at("passed").get<bool>());
        CHECK_FALSE(item.at("skipped").get<bool>());
        CHECK(item.contains("worst_ratio"));
        CHECK(item.contains("empirical_constants"));
    }
    std::remove(report.c_str());
}

TEST_CASE("scaling subcommand reports the diffusive indices") {
    const auto r = run_cli("scaling --config " + data("brownian.json") +
                           " --target Phi --lo 0.1 --hi 10");
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("alpha_hat").get<double>() == Approx(2.0).epsilon(1e-9));
    CHECK(doc.at("beta_hat").get<double>() == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("schema problems exit 2 with a machine-readable error") {
    const auto missing = run_cli("exponent --config /nonexistent.json --grid 1:2:3 --what phi");
    CHECK(missing.code == 2);
    const auto err = json::parse(missing.err);
    CHECK(err.at("error").at("kind").get<std::string>() == "schema");

    const std::string bad = "/tmp/spd_cli_bad_config.json";
    {
        std::ofstream out(bad);
        out << "{\"sigma\": 0, \"b\": 0}";  // no jumps, no diffusion
    }
    const auto noproc = run_cli("exponent --config " + bad + " --grid 1:2:3 --what phi");
    CHECK(noproc.code == 2);
    std::remove(bad.c_str());

    const auto badgrid = run_cli("exponent --config " + data("stable15.json") +
                                 " --grid 5:1:10,log --what phi");
    CHECK(badgrid.code == 2);

    const auto unknown = run_cli("check --config " + data("stable15.json") +
                                 " --suite NOT_A_CHECK");
    CHECK(unknown.code == 2);
}

TEST_CASE("numerical and hypothesis failures map to exits 3 and 4") {
    const auto badt = run_cli("density --config " + data("stable15.json") +
                              " --t 0 --x-grid -1:1:3 --method oracle");
    CHECK(badt.code == 3);
    const auto err3 = json::parse(badt.err);
    CHECK(err3.at("error").at("kind").get<std::string>() == "numerical");

    const auto env = run_cli("density --config " + data("brownian.json") +
                             " --t 1 --x-grid -1:1:3 --method envelope");
    CHECK(env.code == 4);
    const auto err4 = json::parse(env.err);
    CHECK(err4.at("error").at("kind").get<std::string>() == "hypothesis");
}
