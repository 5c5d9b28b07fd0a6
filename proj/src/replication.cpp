#include "smece/replication.hpp"

#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smece {

std::array<std::vector<double>, kNumModels> predict_all(
    const LabeledDataset& dataset, const std::array<ModelSpec, kNumModels>& zoo, Rng& rng) {
  std::array<std::vector<double>, kNumModels> out;
  for (std::size_t m = 0; m < kNumModels; ++m) {
    const auto& spec = zoo[m];
    auto& preds = out[m];
    preds.resize(dataset.size());
    Rng* model_rng = spec.kind == ModelKind::kRandom ? &rng : nullptr;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      preds[i] = predict(spec, dataset.inputs[i], dataset.k, model_rng);
    }
  }
  return out;
}

ReplicationScores score_replication(const ReplicationTask& task, const KernelOptions& options) {
  Rng rng(task.seed);
  GenerativeConfig config;
  config.k = task.k;
  config.n = task.n;
  const auto data = make_dataset(config, options.hard_mode, rng);
  const auto predictions = predict_all(data, options.zoo, rng);

  ReplicationScores scores;
  std::vector<EvalSample> samples;
  samples.reserve(data.size());
  for (std::size_t m = 0; m < kNumModels; ++m) {
    samples.clear();
    for (std::size_t i = 0; i < data.size(); ++i) {
      samples.emplace_back(predictions[m][i], data.soft_labels[i], data.hard_labels[i]);
    }
    const auto bins = summarize_bins(samples, options.num_bins, options.top_edge);
    scores.smece[m] = smece_from_bins(bins, samples.size());
    scores.ece[m] = ece_from_bins(bins, samples.size());
  }
  return scores;
}

std::vector<ReplicationScores> score_replications_serial(std::span<const ReplicationTask> tasks,
                                                         const KernelOptions& options) {
  std::vector<ReplicationScores> out(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = score_replication(tasks[i], options);
  return out;
}

std::vector<ReplicationScores> score_replications_parallel(
    std::span<const ReplicationTask> tasks, const KernelOptions& options, int threads) {
  std::vector<ReplicationScores> out(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
  std::exception_ptr error;
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] =
          score_replication(tasks[static_cast<std::size_t>(i)], options);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(smece_replication_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<ReplicationScores> score_replications(std::span<const ReplicationTask> tasks,
                                                  const KernelOptions& options,
                                                  Execution execution, int threads) {
  if (execution == Execution::kSerial) return score_replications_serial(tasks, options);
  return score_replications_parallel(tasks, options, threads);
}

}  // namespace smece
