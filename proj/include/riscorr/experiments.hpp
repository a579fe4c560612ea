#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riscorr/scenario.hpp"

namespace riscorr::experiments {

/// Design selector for experiments that report several designs:
/// "connected" = column-controlled margin design, "full" = fully controlled
/// margin design, "min" = fully controlled no-margin baseline. Empty = all.
struct ExperimentOptions {
  std::string out_dir = ".";
  std::optional<double> margin_db;
  std::string mode;
};

/// Runs one experiment by name (size | sweep | correlate | power | rate |
/// codebook) and writes its CSV reports into out_dir. Returns the paths
/// written. Output is deterministic in (config, options).
std::vector<std::string> run_experiment(const std::string& name,
                                        const ScenarioConfig& config,
                                        const ExperimentOptions& options);

/// Published square sides for the named deployment cases, by margin
/// (0, 3 or 6 dB). Falls back to the derived sizing chain for custom
/// scenarios.
int design_side(const ScenarioConfig& config, double margin_db);

}  // namespace riscorr::experiments
