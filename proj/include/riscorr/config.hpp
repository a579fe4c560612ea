#pragma once

#include <string>

#include "riscorr/scenario.hpp"

namespace riscorr::config {

/// Parses a sectioned key = value scenario file. Named deployment cases
/// (deployment_case = 1..3) expand to their canonical distances and Rician
/// factors first; any other key in the file then overrides the expanded
/// value. All violations (unknown section/key, bad number, range) are
/// collected and reported together in one config_error, each with its line
/// number.
ScenarioConfig parse_config(const std::string& path);

/// Same, but over already-loaded text (used by tests and the importers).
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin = "<string>");

/// FNV-1a hash of the canonical serialized config, for output headers.
std::string config_hash(const ScenarioConfig& config);

}  // namespace riscorr::config
