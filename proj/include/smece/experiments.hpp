#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smece/binning.hpp"
#include "smece/generative.hpp"
#include "smece/model_zoo.hpp"
#include "smece/replication.hpp"

namespace smece {

inline constexpr std::uint64_t kDefaultMasterSeed = 20260301;

struct ExperimentConfig {
  int experiment_id = 1;
  std::vector<double> k_values;
  std::vector<std::size_t> n_values;
  std::size_t replications = 1;
  int num_bins = kDefaultNumBins;
  std::uint64_t master_seed = kDefaultMasterSeed;
  HardMode hard_mode = HardMode::kThreshold;
  // Experiments leave p = 1.0 outside every bin, which is what the published
  // tables for the clipped Model D correspond to.
  TopEdge top_edge = TopEdge::kOpen;

  /// Throws ConfigError.
  void validate() const;
};

/// Defaults for experiments 1-4:
///   1: k=2, n=5000, 1 rep      2: k in {0.5,1,2,5,10,50}, n=5000, 1 rep
///   3: same k list, n=1000, 1000 reps   4: k=2, n in {500..10000}, 500 reps
ExperimentConfig default_config(int experiment_id);

enum class Metric { kSmece, kEce };

struct MetricCell {
  ModelKind model = ModelKind::kPosteriorMatching;
  Metric metric = Metric::kSmece;
  double mean = 0.0;
  double stddev = 0.0;
  std::optional<int> rank;
};

// ---- ranking -------------------------------------------------------------

enum class Preference { kFirstBetter, kSecondBetter, kTied };

/// Ground-truth calibration order A > B ~ C > D > E.
class GroundTruthOrder {
 public:
  Preference compare(ModelKind first, ModelKind second) const;
  /// The 10 unordered pairs (A,B), (A,C), ..., (D,E) in letter order.
  static const std::array<std::pair<ModelKind, ModelKind>, 10>& pairs();
};

GroundTruthOrder ground_truth_order();

using ModelPair = std::pair<ModelKind, ModelKind>;
using ModelScoreMap = std::map<ModelKind, double>;

struct RankingResult {
  double k = 0.0;
  std::map<ModelPair, double> per_pair;
  double overall = 0.0;
};

/// Fraction of replications in which the truth-better model of each pair
/// scores strictly lower. Tied pairs count as always correct. Throws
/// DomainError when a replication lacks a model's score.
RankingResult pairwise_accuracy(std::span<const ModelScoreMap> scores_per_replication,
                                double k = 0.0);

// ---- results ---------------------------------------------------------------

struct Experiment1Row {
  ModelKind model = ModelKind::kPosteriorMatching;
  double smece = 0.0;
  double ece = 0.0;
  int smece_rank = 0;
  int ece_rank = 0;
};

struct Experiment1Result {
  ExperimentConfig config;
  std::vector<Experiment1Row> rows;
};

struct Experiment2Result {
  ExperimentConfig config;
  // [k_index][model_index]
  std::vector<std::array<double, kNumModels>> smece;
  std::vector<std::array<double, kNumModels>> ece;
};

struct Experiment3Result {
  ExperimentConfig config;
  std::vector<RankingResult> smece;  // one per k
  std::vector<RankingResult> ece;
};

struct Experiment4Result {
  ExperimentConfig config;
  // [n_index][model_index]
  std::vector<std::array<MetricCell, kNumModels>> smece;
  std::vector<std::array<MetricCell, kNumModels>> ece;
};

struct RunOptions {
  Execution execution = Execution::kParallel;
  int threads = 0;
};

Experiment1Result run_experiment1(const ExperimentConfig& config, const RunOptions& run = {});
Experiment2Result run_experiment2(const ExperimentConfig& config, const RunOptions& run = {});
Experiment3Result run_experiment3(const ExperimentConfig& config, const RunOptions& run = {});
Experiment4Result run_experiment4(const ExperimentConfig& config, const RunOptions& run = {});

/// Ordinal ranks (1 = lowest score), ties broken by model letter.
std::array<int, kNumModels> rank_ascending(const std::array<double, kNumModels>& scores);

/// Mean and sample standard deviation (n - 1 denominator; 0 for one value).
std::pair<double, double> mean_and_std(std::span<const double> values);

}  // namespace smece
