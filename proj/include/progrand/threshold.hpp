#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace progrand {

struct FixedThreshold {
    std::uint32_t value = 0;
};

// Free-running counter that stops and holds once every bit reads 1.
struct CounterRamp {
    std::uint32_t initial = 0;
};

// Step-and-hold table: (step, value) entries with strictly increasing steps
// starting at 0; the last value holds after the table ends.
struct CustomSchedule {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> table;
};

using ThresholdSchedule = std::variant<FixedThreshold, CounterRamp, CustomSchedule>;

// Throws ThresholdOutOfRange / ConfigError naming the violated invariant.
void validate_schedule(const ThresholdSchedule& schedule, int sample_width);

// Behavioral model of the threshold source feeding the comparator. advance()
// is called once per generated sample; single-writer per instance.
class ThresholdController {
public:
    ThresholdController(ThresholdSchedule schedule, int sample_width);

    std::uint32_t current_threshold() const { return current_; }
    bool saturated() const { return saturated_; }

    void advance();

private:
    ThresholdSchedule schedule_;
    std::uint32_t max_value_;
    std::uint32_t current_;
    bool saturated_ = false;
    std::uint64_t step_ = 0;
};

// CSV with header "step,threshold"; integer rows, steps strictly increasing
// from 0.
CustomSchedule load_schedule_csv(const std::string& path);

}  // namespace progrand
