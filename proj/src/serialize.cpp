#include "progrand/serialize.hpp"

#include "progrand/errors.hpp"
#include "progrand/io.hpp"

namespace progrand {

namespace {

std::string seed_to_hex(std::uint64_t seed) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(seed));
    return buf;
}

std::uint64_t seed_from_json(const json& j, int degree) {
    if (j.is_number_unsigned()) return parse_seed(std::to_string(j.get<std::uint64_t>()), degree);
    if (j.is_string()) return parse_seed(j.get<std::string>(), degree);
    throw ParseError("seed must be an unsigned integer or a string");
}

}  // namespace

json schedule_to_json(const ThresholdSchedule& schedule) {
    json j;
    if (const auto* fixed = std::get_if<FixedThreshold>(&schedule)) {
        j["type"] = "fixed";
        j["value"] = fixed->value;
    } else if (const auto* ramp = std::get_if<CounterRamp>(&schedule)) {
        j["type"] = "counter_ramp";
        j["initial"] = ramp->initial;
    } else {
        j["type"] = "custom";
        json table = json::array();
        for (const auto& [step, value] : std::get<CustomSchedule>(schedule).table) {
            table.push_back(json::array({step, value}));
        }
        j["table"] = std::move(table);
    }
    return j;
}

ThresholdSchedule schedule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) {
        throw ParseError("schedule must be an object with a 'type' field");
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "fixed") return FixedThreshold{j.at("value").get<std::uint32_t>()};
    if (type == "counter_ramp") return CounterRamp{j.at("initial").get<std::uint32_t>()};
    if (type == "custom") {
        CustomSchedule custom;
        for (const auto& row : j.at("table")) {
            if (!row.is_array() || row.size() != 2) {
                throw ParseError("custom schedule rows must be [step, value] pairs");
            }
            custom.table.emplace_back(row[0].get<std::uint64_t>(), row[1].get<std::uint32_t>());
        }
        return custom;
    }
    throw ParseError("unknown schedule type '" + type + "'");
}

json config_to_json(const GeneratorConfig& config) {
    json j;
    j["polynomial"] = config.polynomial.to_caret();
    j["seed"] = seed_to_hex(config.seed);
    j["m"] = config.sample_width;
    json streams = json::array();
    for (const StreamConfig& s : config.streams) {
        json taps = json::array();
        for (const TapSet& t : s.tap_sets) taps.push_back(t.positions);
        streams.push_back(std::move(taps));
    }
    j["streams"] = std::move(streams);
    j["schedule"] = schedule_to_json(config.schedule);
    return j;
}

GeneratorConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    for (const char* key : {"polynomial", "seed", "m", "streams", "schedule"}) {
        if (!j.contains(key)) throw ParseError(std::string("config is missing '") + key + "'");
    }
    GF2Polynomial poly = parse_polynomial(j.at("polynomial").get<std::string>());
    GeneratorConfig config{poly, seed_from_json(j.at("seed"), poly.degree()),
                           j.at("m").get<int>(), {}, FixedThreshold{0}};
    int index = 0;
    for (const auto& taps : j.at("streams")) {
        StreamConfig s;
        s.stream_id = "s" + std::to_string(index++);
        if (!taps.is_array()) throw ParseError("each stream must be an array of tap lists");
        for (const auto& tap_list : taps) {
            TapSet t;
            for (const auto& p : tap_list) t.positions.push_back(p.get<int>());
            s.tap_sets.push_back(std::move(t));
        }
        config.streams.push_back(std::move(s));
    }
    config.schedule = schedule_from_json(j.at("schedule"));
    validate_config(config);
    return config;
}

json report_to_json(const CorrelationReport& report) {
    json j;
    j["lags"] = report.lags;
    j["values"] = report.values;
    j["max_abs_lag"] = report.max_abs_lag;
    j["max_abs_value"] = report.max_abs_value;
    return j;
}

std::string report_to_csv(const CorrelationReport& report) {
    std::string out = "lag,value\n";
    for (std::size_t i = 0; i < report.lags.size(); ++i) {
        out += std::to_string(report.lags[i]) + "," + format_double(report.values[i]) + "\n";
    }
    return out;
}

json fit_to_json(const QuadraticFit& fit) {
    json j;
    j["c2"] = fit.c2;
    j["c1"] = fit.c1;
    j["c0"] = fit.c0;
    j["r_squared"] = fit.r_squared;
    const auto [slope, intercept] = fit_derivative(fit);
    j["derivative"] = {{"slope", slope}, {"intercept", intercept}};
    return j;
}

}  // namespace progrand
