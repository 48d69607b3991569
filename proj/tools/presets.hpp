#pragma once

#include <string>
#include <vector>

#include "scenario.hpp"

namespace spreadcx::cli {

/// A named figure-class run. Multi-panel figures expand into several scenarios.
struct Preset {
  std::string name;
  std::string description;
  std::vector<Json> scenarios;
};

/// All presets in a fixed order.
const std::vector<Preset>& presets();

/// Throws std::out_of_range naming the unknown preset.
const Preset& find_preset(const std::string& name);

}  // namespace spreadcx::cli
