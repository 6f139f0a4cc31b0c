#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "reptile/scenarios/report.hpp"

namespace reptile::scenarios {

struct UnknownScenario : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// three-dim, two-indivisible, case-a, case-b, case-c, hill (without "all").
const std::vector<std::string>& scenario_names();

/// Fixture directory of the source tree, used when the config leaves it empty.
std::filesystem::path default_fixture_dir();

/// Runs one scenario, or all of them in the order of scenario_names(). Throws
/// UnknownScenario, std::invalid_argument for a bad config and AnchorMissing
/// when a checkpoint has no fixture entry.
Report run_scenario(const std::string& name, Config config);

}  // namespace reptile::scenarios
