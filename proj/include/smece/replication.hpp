#pragma once

// Monte Carlo replication kernels. The serial loop is the reference; the
// OpenMP loop must produce bitwise-identical results for any thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "smece/binning.hpp"
#include "smece/generative.hpp"
#include "smece/model_zoo.hpp"

namespace smece {

enum class Execution { kSerial, kParallel };

struct ReplicationTask {
  double k = 2.0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
};

struct KernelOptions {
  int num_bins = kDefaultNumBins;
  HardMode hard_mode = HardMode::kThreshold;
  TopEdge top_edge = TopEdge::kOpen;
  std::array<ModelSpec, kNumModels> zoo = default_zoo();
};

/// SMECE and ECE for every model on one dataset, indexed by model_index().
struct ReplicationScores {
  std::array<double, kNumModels> smece{};
  std::array<double, kNumModels> ece{};
};

/// Draws one dataset from task.seed (inputs, then Bernoulli labels if
/// enabled, then Model E predictions) and scores all five models.
ReplicationScores score_replication(const ReplicationTask& task, const KernelOptions& options);

std::vector<ReplicationScores> score_replications_serial(std::span<const ReplicationTask> tasks,
                                                         const KernelOptions& options);

/// `threads` <= 0 uses the OpenMP default.
std::vector<ReplicationScores> score_replications_parallel(
    std::span<const ReplicationTask> tasks, const KernelOptions& options, int threads = 0);

std::vector<ReplicationScores> score_replications(std::span<const ReplicationTask> tasks,
                                                  const KernelOptions& options,
                                                  Execution execution, int threads = 0);

/// Predictions of all five models for a dataset, in model_index() order.
/// Model E consumes dataset.size() draws from `rng`.
std::array<std::vector<double>, kNumModels> predict_all(
    const LabeledDataset& dataset, const std::array<ModelSpec, kNumModels>& zoo, Rng& rng);

}  // namespace smece
