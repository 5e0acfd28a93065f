#include "progrand/threshold.hpp"

#include <fstream>

#include "progrand/errors.hpp"

namespace progrand {

namespace {

std::uint32_t max_for_width(int m) {
    if (m < 1 || m > 32) throw Error("sample width m must be between 1 and 32");
    return m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
}

void check_value(std::uint32_t v, std::uint32_t max) {
    if (v > max) {
        throw ThresholdOutOfRange("threshold " + std::to_string(v) + " exceeds 2^m - 1 = " +
                                  std::to_string(max));
    }
}

std::uint32_t table_value_at(const CustomSchedule& s, std::uint64_t step) {
    std::uint32_t value = s.table.front().second;
    for (const auto& [at, v] : s.table) {
        if (at > step) break;
        value = v;
    }
    return value;
}

}  // namespace

void validate_schedule(const ThresholdSchedule& schedule, int sample_width) {
    const std::uint32_t max = max_for_width(sample_width);
    if (const auto* fixed = std::get_if<FixedThreshold>(&schedule)) {
        check_value(fixed->value, max);
    } else if (const auto* ramp = std::get_if<CounterRamp>(&schedule)) {
        check_value(ramp->initial, max);
    } else {
        const auto& table = std::get<CustomSchedule>(schedule).table;
        if (table.empty()) throw ConfigError("custom schedule table is empty");
        if (table.front().first != 0) throw ConfigError("custom schedule must start at step 0");
        for (std::size_t i = 0; i < table.size(); ++i) {
            check_value(table[i].second, max);
            if (i > 0 && table[i].first <= table[i - 1].first) {
                throw ConfigError("custom schedule steps must be strictly increasing");
            }
        }
    }
}

ThresholdController::ThresholdController(ThresholdSchedule schedule, int sample_width)
    : schedule_(std::move(schedule)), max_value_(max_for_width(sample_width)) {
    validate_schedule(schedule_, sample_width);
    if (const auto* fixed = std::get_if<FixedThreshold>(&schedule_)) {
        current_ = fixed->value;
    } else if (const auto* ramp = std::get_if<CounterRamp>(&schedule_)) {
        current_ = ramp->initial;
        saturated_ = current_ == max_value_;
    } else {
        current_ = table_value_at(std::get<CustomSchedule>(schedule_), 0);
    }
}

void ThresholdController::advance() {
    ++step_;
    if (std::holds_alternative<FixedThreshold>(schedule_)) {
        return;
    }
    if (std::holds_alternative<CounterRamp>(schedule_)) {
        if (saturated_) return;  // clock gated off, counter holds
        ++current_;
        saturated_ = current_ == max_value_;
        return;
    }
    current_ = table_value_at(std::get<CustomSchedule>(schedule_), step_);
}

CustomSchedule load_schedule_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open schedule file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "step,threshold") {
        throw ParseError("schedule CSV must start with header 'step,threshold': " + path);
    }
    CustomSchedule schedule;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("malformed schedule row: " + line);
        try {
            const std::uint64_t step = std::stoull(line.substr(0, comma));
            const unsigned long value = std::stoul(line.substr(comma + 1));
            schedule.table.emplace_back(step, static_cast<std::uint32_t>(value));
        } catch (const std::exception&) {
            throw ParseError("malformed schedule row: " + line);
        }
    }
    if (schedule.table.empty()) throw ParseError("schedule CSV has no rows: " + path);
    return schedule;
}

}  // namespace progrand
