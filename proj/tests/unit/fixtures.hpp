#pragma once

#include "endo/scenario.hpp"

#include <string>
#include <vector>

inline std::string scenario_path(const std::string& name) {
  return std::string(ENDO_SOURCE_DIR) + "/scenarios/" + name + ".scn";
}

inline endo::Scenario shipped(const std::string& name) { return endo::load_scenario(scenario_path(name)); }

inline const std::vector<std::string>& shipped_names() {
  static const std::vector<std::string> names = {"sl2_endoscopy", "su2_trivial", "a1xa1_endoscopy", "c2_endoscopy"};
  return names;
}
