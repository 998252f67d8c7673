#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace conekit {

struct ScenarioInfo {
  std::string kind;
  std::string description;
  nlohmann::json defaults;
};

/// Registered scenario kinds, in the order they are listed by the CLI.
const std::vector<ScenarioInfo>& scenario_catalog();

struct ScenarioRequest {
  std::string kind;
  nlohmann::json params;  // complete parameter set (see merged_params)
  std::uint64_t seed = 1;
  std::filesystem::path out_dir;
};

struct ScenarioResult {
  bool all_passed = false;
  nlohmann::json summary;
  std::vector<std::filesystem::path> outputs;
};

/// Defaults for the kind overlaid with overrides; unknown kinds and
/// unknown parameter keys are rejected.
nlohmann::json merged_params(const std::string& kind,
                             const nlohmann::json& overrides);

/// Run one scenario. CSV data files and the JSON summary are written
/// atomically (temp file, then rename) into out_dir; CSV bytes depend
/// only on (params, seed).
ScenarioResult run_scenario(const ScenarioRequest& request);

}  // namespace conekit
