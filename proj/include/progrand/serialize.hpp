#pragma once

#include <string>

#include <json.hpp>

#include "progrand/engine.hpp"
#include "progrand/stats.hpp"

namespace progrand {

using json = nlohmann::ordered_json;

// Stream configs are arrays of tap lists; the schedule is a tagged object:
//   {"type": "fixed", "value": 127}
//   {"type": "counter_ramp", "initial": 0}
//   {"type": "custom", "table": [[0, 10], [5, 200]]}
// Seeds are emitted as hex strings so 64-bit values survive JSON numerics.
json schedule_to_json(const ThresholdSchedule& schedule);
ThresholdSchedule schedule_from_json(const json& j);

json config_to_json(const GeneratorConfig& config);
GeneratorConfig config_from_json(const json& j);

json report_to_json(const CorrelationReport& report);
std::string report_to_csv(const CorrelationReport& report);

json fit_to_json(const QuadraticFit& fit);

}  // namespace progrand
