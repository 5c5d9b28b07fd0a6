#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smece/binning.hpp"
#include "smece/dataset_io.hpp"
#include "smece/experiments.hpp"
#include "smece/generative.hpp"
#include "smece/table.hpp"

namespace smece {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitData = 3,
  kExitIo = 4,
};

/// Environment variable consulted for the seed when --seed is absent.
inline constexpr const char* kSeedEnvVar = "SMECE_SEED";

struct MetricsArgs {
  std::filesystem::path input;
  int num_bins = kDefaultNumBins;
  TableFormat format = TableFormat::kCsv;
  std::optional<std::filesystem::path> out;  // stdout when empty
  ColumnSelection columns;
  TopEdge top_edge = TopEdge::kClosed;
};

struct SimulateArgs {
  double k = 2.0;
  std::size_t n = 5000;
  HardMode hard_mode = HardMode::kThreshold;
  std::uint64_t seed = kDefaultMasterSeed;
  std::filesystem::path out;
};

struct ExperimentArgs {
  std::vector<int> experiment_ids;  // empty means all four
  // Overrides; unset fields keep the per-experiment defaults.
  std::optional<std::vector<double>> k_values;
  std::optional<std::vector<std::size_t>> n_values;
  std::optional<std::size_t> replications;
  std::optional<int> num_bins;
  std::optional<HardMode> hard_mode;
  std::optional<TopEdge> top_edge;
  std::uint64_t seed = kDefaultMasterSeed;
  TableFormat format = TableFormat::kCsv;
  std::filesystem::path out_dir = "results";
  std::optional<std::filesystem::path> manifest;  // replay from this manifest
  RunOptions run;
};

struct ReliabilityArgs {
  std::filesystem::path input;
  int num_bins = kDefaultNumBins;
  ReliabilityTarget target = ReliabilityTarget::kSoft;
  TableFormat format = TableFormat::kCsv;
  std::optional<std::filesystem::path> out;
  ColumnSelection columns;
  TopEdge top_edge = TopEdge::kClosed;
};

// Each command throws the typed errors from errors.hpp; run_guarded maps
// them to exit codes.
CalibrationReport cmd_metrics(const MetricsArgs& args, std::ostream& out, std::ostream& log);
void cmd_simulate(const SimulateArgs& args);
/// Returns the paths written, manifests included.
std::vector<std::filesystem::path> cmd_experiment(const ExperimentArgs& args, std::ostream& log);
std::vector<ReliabilityPoint> cmd_reliability(const ReliabilityArgs& args, std::ostream& out);

/// Resolves the effective configs for an experiment request, validating
/// every override before any computation.
std::vector<ExperimentConfig> resolve_experiment_configs(const ExperimentArgs& args);

/// Calls `body`, printing any error to `log`, and returns the exit code.
template <typename F>
int run_guarded(F&& body, std::ostream& log);

int exit_code_for_current_exception(std::ostream& log);

template <typename F>
int run_guarded(F&& body, std::ostream& log) {
  try {
    body();
    return kExitOk;
  } catch (...) {
    return exit_code_for_current_exception(log);
  }
}

}  // namespace smece
