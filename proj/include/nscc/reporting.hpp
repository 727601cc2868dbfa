#pragma once

#include "nscc/config.hpp"

#include <string>
#include <vector>

namespace nscc {

// Command bodies behind the CLI. Each writes CSV artifacts (and a JSON run
// manifest where noted) into config.output_dir; errors are thrown as the
// typed exceptions and mapped to exit codes by the CLI layer.

// calibration.csv + calibration_scales.csv + manifest.
void cmd_calibrate(const RunConfig& config);

// trajectory.csv + climate.csv + floor_events.csv + manifest.
void cmd_run(const RunConfig& config);

// nscc_<year>.csv per eval year + global_sums.csv + manifest. Uncertainty
// columns appear when uncertainty.draws > 0.
void cmd_scc(const RunConfig& config);

// montecarlo_<year>.csv per eval year + manifest.
void cmd_montecarlo(const RunConfig& config);

// damage_function_comparison.csv; `forms` empty selects every named form plus
// the mixture and, when benchmarks are configured, the sectoral model.
void cmd_compare_damage_functions(const RunConfig& config, const std::vector<std::string>& forms);

// diagnostics_covariates.csv + diagnostics_correlations.csv +
// epsilon_sweep.csv (+ nscc_change.csv behind emit_change_table); reads the
// nscc_<year>.csv files written by `scc`.
void cmd_diagnostics(const RunConfig& config);

} // namespace nscc
