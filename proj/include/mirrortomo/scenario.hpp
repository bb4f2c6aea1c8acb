#pragma once

#include <string>

#include "mirrortomo/harness.hpp"

namespace mtomo {

// A scenario file parsed into a runnable Scenario plus a canonical JSON echo
// of the input (re-serialized with sorted keys) for embedding in reports.
struct ScenarioDoc {
  Scenario scenario;
  std::string echo;
};

struct PolygonDoc {
  Polygon2 poly;
  std::string echo;
};

// Parse errors carry errc::parse_error and name the offending field.
ScenarioDoc parse_scenario_text(const std::string& json_text);
ScenarioDoc load_scenario_file(const std::string& path);

PolygonDoc parse_polygon_text(const std::string& json_text);
PolygonDoc load_polygon_file(const std::string& path);

}  // namespace mtomo
