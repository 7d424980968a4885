// runner.hpp — executes one configured experiment and writes its artifacts.

#pragma once

#include "revival_cli/config.hpp"

#include <filesystem>
#include <vector>

namespace revival_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitGuard = 4;

struct RunResult {
    std::vector<std::filesystem::path> artifacts;
};

// Writes CSV/JSON artifacts plus a metadata sidecar into cfg.out_dir.
// Identical config + seed produces byte-identical data files; only the
// sidecar's wall-time field varies between runs. Throws ConfigError,
// GuardError, or std::exception for the three failure exit codes.
RunResult run_experiment(const ExperimentConfig& cfg);

// run_experiment wrapped in the exit-code policy (0/2/3/4), errors printed to
// stderr.
int run_experiment_cli(const ExperimentConfig& cfg);

}  // namespace revival_cli
