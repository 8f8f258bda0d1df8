#pragma once

#include "config.hpp"
#include "report.hpp"

namespace lptrans::cli {

/// Runs the experiment named by config.kind. Numerical failures inside a
/// check are recorded as failed checks carrying the error text.
RunReport run(const ExperimentConfig& config);

}  // namespace lptrans::cli
