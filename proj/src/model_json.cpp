#include "spd/model_json.hpp"

#include <fstream>
#include <sstream>

#include "../vendor/json.hpp"
#include "spd/errors.hpp"

namespace spd {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw SchemaError(path + ": " + reason);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) fail(path + "." + it.key(), "unknown key");
    }
}

double optional_scale(const json& obj, const std::string& path) {
    if (!obj.contains("scale")) return 1.0;
    const double s = require_number(obj.at("scale"), path + ".scale");
    if (!(s > 0.0) || !std::isfinite(s)) fail(path + ".scale", "must be positive and finite");
    return s;
}

void parse_jumps_into(const json& j, const std::string& path,
                      std::vector<AtomicJumps>& out, int depth) {
    if (depth > 8) fail(path, "mixture nesting too deep");
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("family")) fail(path + ".family", "missing");
    if (!j.at("family").is_string()) fail(path + ".family", "expected a string");
    const std::string family = j.at("family").get<std::string>();

    if (family == "stable") {
        reject_unknown_keys(j, path, {"family", "alpha", "scale"});
        if (!j.contains("alpha")) fail(path + ".alpha", "missing");
        const double alpha = require_number(j.at("alpha"), path + ".alpha");
        if (!(alpha > 1.0 && alpha < 2.0)) fail(path + ".alpha", "must lie in (1, 2)");
        out.push_back(StableJumps{alpha, optional_scale(j, path)});
    } else if (family == "stable_boundary") {
        reject_unknown_keys(j, path, {"family", "scale"});
        out.push_back(StableBoundaryJumps{optional_scale(j, path)});
    } else if (family == "tempered_stable") {
        reject_unknown_keys(j, path, {"family", "alpha", "theta", "scale"});
        if (!j.contains("alpha")) fail(path + ".alpha", "missing");
        if (!j.contains("theta")) fail(path + ".theta", "missing");
        const double alpha = require_number(j.at("alpha"), path + ".alpha");
        const double theta = require_number(j.at("theta"), path + ".theta");
        if (!(alpha > 0.0 && alpha < 2.0)) fail(path + ".alpha", "must lie in (0, 2)");
        if (!(theta > 0.0) || !std::isfinite(theta)) fail(path + ".theta", "must be positive and finite");
        out.push_back(TemperedStableJumps{alpha, theta, optional_scale(j, path)});
    } else if (family == "truncated_stable") {
        reject_unknown_keys(j, path, {"family", "alpha", "cutoff", "scale"});
        if (!j.contains("alpha")) fail(path + ".alpha", "missing");
        if (!j.contains("cutoff")) fail(path + ".cutoff", "missing");
        const double alpha = require_number(j.at("alpha"), path + ".alpha");
        const double cutoff = require_number(j.at("cutoff"), path + ".cutoff");
        if (!(alpha > 0.0 && alpha < 2.0)) fail(path + ".alpha", "must lie in (0, 2)");
        if (!(cutoff > 0.0) || !std::isfinite(cutoff)) fail(path + ".cutoff", "must be positive and finite");
        out.push_back(TruncatedStableJumps{alpha, cutoff, optional_scale(j, path)});
    } else if (family == "mixture") {
        reject_unknown_keys(j, path, {"family", "components"});
        if (!j.contains("components")) fail(path + ".components", "missing");
        const json& comps = j.at("components");
        if (!comps.is_array() || comps.empty()) fail(path + ".components", "expected a non-empty array");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::ostringstream os;
            os << path << ".components[" << i << "]";
            parse_jumps_into(comps[i], os.str(), out, depth + 1);
        }
    } else {
        fail(path + ".family",
             "unknown family '" + family +
                 "' (expected stable, stable_boundary, tempered_stable, truncated_stable, or mixture)");
    }
}

LevyModel parse_model(const json& config) {
    if (!config.is_object()) fail("$", "config must be a JSON object");
    reject_unknown_keys(config, "$",
                        {"sigma", "b", "jumps", "x0", "declared_alpha", "declared_beta"});

    LevyModel m;
    if (!config.contains("sigma")) fail("$.sigma", "missing");
    m.sigma = require_number(config.at("sigma"), "$.sigma");
    if (!(m.sigma >= 0.0) || !std::isfinite(m.sigma)) fail("$.sigma", "must be finite and >= 0");

    if (!config.contains("b")) fail("$.b", "missing");
    bool center = false;
    const json& bj = config.at("b");
    if (bj.is_string()) {
        if (bj.get<std::string>() != "centered")
            fail("$.b", "expected a number or the string \"centered\"");
        center = true;
    } else {
        m.b = require_number(bj, "$.b");
        if (!std::isfinite(m.b)) fail("$.b", "must be finite");
    }

    if (config.contains("jumps")) {
        parse_jumps_into(config.at("jumps"), "$.jumps", m.jumps.components, 0);
    } else if (!(m.sigma > 0.0)) {
        fail("$.jumps", "missing with sigma = 0: the triplet describes no process");
    }

    m.x0 = default_x0(m.jumps);
    if (config.contains("x0")) {
        m.x0 = require_number(config.at("x0"), "$.x0");
        if (!(m.x0 >= 0.0) || !std::isfinite(m.x0)) fail("$.x0", "must be finite and >= 0");
    }
    if (config.contains("declared_alpha"))
        m.declared_alpha = require_number(config.at("declared_alpha"), "$.declared_alpha");
    if (config.contains("declared_beta"))
        m.declared_beta = require_number(config.at("declared_beta"), "$.declared_beta");

    if (center) {
        try {
            m = centered(m);
        } catch (const SchemaError&) {
            fail("$.b", "\"centered\" requires a finite jump tail mean, but it is infinite");
        }
    }

    const auto verdict = validate_model(m);
    if (!verdict.ok) {
        std::ostringstream os;
        os << "$: model fails validation:";
        for (const auto& v : verdict.violations) os << "\n  - " << v;
        throw SchemaError(os.str());
    }
    return m;
}

}  // namespace

LevyModel parse_model_text(const std::string& text) {
    json config;
    try {
        config = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_model(config);
}

LevyModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str());
}

}  // namespace spd
