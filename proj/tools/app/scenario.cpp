#include "app/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sddm/errors.hpp"

namespace sddm::app {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
    throw ValidationError(context + ": " + what);
}

const json& require_field(const json& obj, const char* key, const std::string& context) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(context, std::string("missing field '") + key + "'");
    return *it;
}

double parse_number(const json& v, const std::string& context) {
    if (!v.is_number()) fail(context, "expected a number");
    return v.get<double>();
}

// Decimal number, or a string like "4%" or "0.04".
double parse_rate(const json& v, const std::string& context) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
        std::size_t start = 0;
        while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
        s = s.substr(start);
        bool percent = false;
        if (!s.empty() && s.back() == '%') {
            percent = true;
            s.pop_back();
        }
        try {
            std::size_t used = 0;
            double value = std::stod(s, &used);
            while (used < s.size() && (s[used] == ' ' || s[used] == '\t')) ++used;
            if (used != s.size()) throw std::invalid_argument(s);
            return percent ? value / 100.0 : value;
        } catch (const std::exception&) {
            fail(context, "cannot parse rate '" + v.get<std::string>() + "'");
        }
    }
    fail(context, "expected a number or a percent string");
}

GrowthModel parse_growth(const json& v, const std::string& context) {
    if (!v.is_object()) fail(context, "growth must be an object");
    const bool has_states = v.contains("states") || v.contains("probs");
    const bool has_moments = v.contains("mean") || v.contains("stddev");
    if (has_states && has_moments) {
        fail(context, "growth must use either states/probs or mean/stddev, not both");
    }
    if (has_states) {
        const json& states = require_field(v, "states", context);
        const json& probs = require_field(v, "probs", context);
        if (!states.is_array() || !probs.is_array()) {
            fail(context, "states and probs must be arrays");
        }
        std::vector<double> s, p;
        for (const auto& e : states) s.push_back(parse_rate(e, context + ".states"));
        for (const auto& e : probs) p.push_back(parse_number(e, context + ".probs"));
        return GrowthModel::from_states(std::move(s), std::move(p));
    }
    const double mean = parse_rate(require_field(v, "mean", context), context + ".mean");
    const double stddev = parse_rate(require_field(v, "stddev", context), context + ".stddev");
    return GrowthModel::from_moments(mean, stddev);
}

CompanyParams parse_company(const json& v, const std::string& context) {
    if (!v.is_object()) fail(context, "company must be an object");
    CompanyParams c;
    c.dps0 = parse_number(require_field(v, "dps0", context), context + ".dps0");
    c.discount_rate =
        parse_rate(require_field(v, "discount_rate", context), context + ".discount_rate");
    c.shares = parse_number(require_field(v, "shares", context), context + ".shares");
    c.growth = parse_growth(require_field(v, "growth", context), context + ".growth");
    return c;
}

json growth_to_json(const GrowthModel& g) {
    json out;
    if (g.moments_only()) {
        out["mean"] = g.mean();
        out["stddev"] = g.stddev();
    } else {
        out["states"] = g.states();
        out["probs"] = g.probs();
    }
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("scenario: top level must be an object");

    Scenario sc;
    const json& companies = require_field(doc, "companies", "scenario");
    if (!companies.is_object() || companies.empty()) {
        throw ValidationError("scenario.companies must be a non-empty object");
    }
    for (const auto& [name, body] : companies.items()) {
        sc.companies.emplace(name, parse_company(body, "company '" + name + "'"));
    }

    const json& merger = require_field(doc, "merger", "scenario");
    sc.merger.acquirer =
        require_field(merger, "acquirer", "scenario.merger").get<std::string>();
    sc.merger.target = require_field(merger, "target", "scenario.merger").get<std::string>();
    sc.merger.growth = parse_growth(require_field(merger, "growth", "scenario.merger"),
                                    "scenario.merger.growth");
    if (merger.contains("discount_override")) {
        sc.merger.discount_override =
            parse_rate(merger["discount_override"], "scenario.merger.discount_override");
    }
    for (const char* role : {"acquirer", "target"}) {
        const std::string& name = role == std::string("acquirer") ? sc.merger.acquirer
                                                                  : sc.merger.target;
        if (!sc.companies.contains(name)) {
            throw ValidationError("scenario.merger: unknown company name '" + name + "'");
        }
    }
    if (sc.merger.acquirer == sc.merger.target) {
        throw ValidationError("scenario.merger: acquirer and target must differ");
    }

    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        SweepConfig cfg;
        cfg.g_min = parse_rate(require_field(sw, "g_min", "scenario.sweep"), "sweep.g_min");
        cfg.g_max = parse_rate(require_field(sw, "g_max", "scenario.sweep"), "sweep.g_max");
        cfg.g_steps = static_cast<int>(
            parse_number(require_field(sw, "g_steps", "scenario.sweep"), "sweep.g_steps"));
        const json& sigmas = require_field(sw, "sigmas", "scenario.sweep");
        if (!sigmas.is_array()) throw ValidationError("scenario.sweep.sigmas must be an array");
        for (const auto& e : sigmas) cfg.sigmas.push_back(parse_rate(e, "sweep.sigmas"));
        if (sw.contains("clamp_r_max")) {
            cfg.clamp_r_max = parse_number(sw["clamp_r_max"], "sweep.clamp_r_max");
        }
        sc.sweep = cfg;
    }

    if (doc.contains("sim")) {
        const json& sim = doc["sim"];
        if (sim.contains("horizon")) {
            const json& h = sim["horizon"];
            if (h.is_string() && h.get<std::string>() == "auto") {
                sc.sim.horizon = 0;
            } else {
                sc.sim.horizon =
                    static_cast<long long>(parse_number(h, "sim.horizon"));
            }
        }
        if (sim.contains("paths")) {
            sc.sim.paths = static_cast<long long>(parse_number(sim["paths"], "sim.paths"));
        }
        if (sim.contains("seed")) {
            if (!sim["seed"].is_number()) throw ValidationError("sim.seed: expected a number");
            sc.sim.seed = sim["seed"].get<std::uint64_t>();
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
    json doc;
    for (const auto& [name, c] : s.companies) {
        json body;
        body["dps0"] = c.dps0;
        body["discount_rate"] = c.discount_rate;
        body["shares"] = c.shares;
        body["growth"] = growth_to_json(c.growth);
        doc["companies"][name] = body;
    }
    doc["merger"]["acquirer"] = s.merger.acquirer;
    doc["merger"]["target"] = s.merger.target;
    doc["merger"]["growth"] = growth_to_json(s.merger.growth);
    if (s.merger.discount_override) {
        doc["merger"]["discount_override"] = *s.merger.discount_override;
    }
    if (s.sweep) {
        doc["sweep"]["g_min"] = s.sweep->g_min;
        doc["sweep"]["g_max"] = s.sweep->g_max;
        doc["sweep"]["g_steps"] = s.sweep->g_steps;
        doc["sweep"]["sigmas"] = s.sweep->sigmas;
        doc["sweep"]["clamp_r_max"] = s.sweep->clamp_r_max;
    }
    if (s.sim.horizon == 0) {
        doc["sim"]["horizon"] = "auto";
    } else {
        doc["sim"]["horizon"] = s.sim.horizon;
    }
    doc["sim"]["paths"] = s.sim.paths;
    doc["sim"]["seed"] = s.sim.seed;
    return doc.dump(2) + "\n";
}

MergerInputs merger_inputs(const Scenario& s) {
    const auto acquirer = s.companies.find(s.merger.acquirer);
    const auto target = s.companies.find(s.merger.target);
    if (acquirer == s.companies.end()) {
        throw ValidationError("unknown company name '" + s.merger.acquirer + "'");
    }
    if (target == s.companies.end()) {
        throw ValidationError("unknown company name '" + s.merger.target + "'");
    }
    MergerInputs m;
    m.acquirer = acquirer->second;
    m.target = target->second;
    m.merged_growth = s.merger.growth;
    m.discount_override = s.merger.discount_override;
    return m;
}

}  // namespace sddm::app
