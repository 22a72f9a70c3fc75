#pragma once

#include <string>

#include "metacloud/config.hpp"

namespace metacloud {

// Runs the configured experiment, writing CSV/SVG artifacts and a manifest
// into cfg.out_dir. Returns 0 when all gates pass, 2 on a gate failure.
// Errors are reported by exception.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace metacloud
