#include "smece/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "smece/errors.hpp"
#include "smece/random.hpp"

namespace smece {

namespace {

const std::vector<double> kSweepK = {0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
const std::vector<std::size_t> kSweepN = {500, 1000, 2000, 5000, 10000};

void require_id(const ExperimentConfig& config, int expected) {
  if (config.experiment_id != expected) {
    throw ConfigError("config is for experiment " + std::to_string(config.experiment_id) +
                      ", runner expects " + std::to_string(expected));
  }
  config.validate();
}

KernelOptions kernel_options(const ExperimentConfig& config) {
  KernelOptions options;
  options.num_bins = config.num_bins;
  options.hard_mode = config.hard_mode;
  options.top_edge = config.top_edge;
  return options;
}

ModelScoreMap to_map(const std::array<double, kNumModels>& scores) {
  ModelScoreMap map;
  for (auto kind : kAllModels) map[kind] = scores[model_index(kind)];
  return map;
}

int tier(ModelKind kind) {
  switch (kind) {
    case ModelKind::kPosteriorMatching: return 0;
    case ModelKind::kOverconfident:
    case ModelKind::kUnderconfident: return 1;
    case ModelKind::kBiasedHigh: return 2;
    case ModelKind::kRandom: return 3;
  }
  return 4;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (experiment_id < 1 || experiment_id > 4) {
    throw ConfigError("experiment id must be 1..4, got " + std::to_string(experiment_id));
  }
  if (k_values.empty()) throw ConfigError("at least one k value is required");
  if (k_values.size() > kMaxKIndex + 1) throw ConfigError("too many k values");
  for (double k : k_values) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw ConfigError("k values must be positive, got " + std::to_string(k));
    }
  }
  if (n_values.empty()) throw ConfigError("at least one n value is required");
  if (n_values.size() > kMaxNIndex + 1) throw ConfigError("too many n values");
  for (auto n : n_values) {
    if (n < 1) throw ConfigError("n values must be >= 1");
  }
  if (replications < 1) throw ConfigError("replications must be >= 1");
  if (replications > kMaxReplication + 1) throw ConfigError("too many replications");
  if (num_bins < 1) throw ConfigError("bin count must be >= 1");
}

ExperimentConfig default_config(int experiment_id) {
  ExperimentConfig config;
  config.experiment_id = experiment_id;
  switch (experiment_id) {
    case 1:
      config.k_values = {2.0};
      config.n_values = {5000};
      config.replications = 1;
      break;
    case 2:
      config.k_values = kSweepK;
      config.n_values = {5000};
      config.replications = 1;
      break;
    case 3:
      config.k_values = kSweepK;
      config.n_values = {1000};
      config.replications = 1000;
      break;
    case 4:
      config.k_values = {2.0};
      config.n_values = kSweepN;
      config.replications = 500;
      break;
    default:
      throw ConfigError("experiment id must be 1..4, got " + std::to_string(experiment_id));
  }
  return config;
}

Preference GroundTruthOrder::compare(ModelKind first, ModelKind second) const {
  const int a = tier(first);
  const int b = tier(second);
  if (a < b) return Preference::kFirstBetter;
  if (b < a) return Preference::kSecondBetter;
  return Preference::kTied;
}

const std::array<std::pair<ModelKind, ModelKind>, 10>& GroundTruthOrder::pairs() {
  static const auto kPairs = [] {
    std::array<std::pair<ModelKind, ModelKind>, 10> out;
    std::size_t i = 0;
    for (std::size_t a = 0; a < kNumModels; ++a) {
      for (std::size_t b = a + 1; b < kNumModels; ++b) out[i++] = {kAllModels[a], kAllModels[b]};
    }
    return out;
  }();
  return kPairs;
}

GroundTruthOrder ground_truth_order() { return {}; }

RankingResult pairwise_accuracy(std::span<const ModelScoreMap> scores_per_replication,
                                double k) {
  if (scores_per_replication.empty()) throw DomainError("no replications to rank");
  const auto order = ground_truth_order();
  RankingResult result;
  result.k = k;

  for (std::size_t r = 0; r < scores_per_replication.size(); ++r) {
    for (auto kind : kAllModels) {
      if (!scores_per_replication[r].contains(kind)) {
        throw DomainError("replication " + std::to_string(r) + " has no score for model " +
                          std::string(1, model_letter(kind)));
      }
    }
  }

  double sum = 0.0;
  for (const auto& pair : GroundTruthOrder::pairs()) {
    const auto pref = order.compare(pair.first, pair.second);
    double accuracy = 1.0;
    if (pref != Preference::kTied) {
      const auto better = pref == Preference::kFirstBetter ? pair.first : pair.second;
      const auto worse = pref == Preference::kFirstBetter ? pair.second : pair.first;
      std::size_t correct = 0;
      for (const auto& scores : scores_per_replication) {
        if (scores.at(better) < scores.at(worse)) ++correct;
      }
      accuracy = static_cast<double>(correct) / static_cast<double>(scores_per_replication.size());
    }
    result.per_pair[pair] = accuracy;
    sum += accuracy;
  }
  result.overall = sum / static_cast<double>(GroundTruthOrder::pairs().size());
  return result;
}

std::array<int, kNumModels> rank_ascending(const std::array<double, kNumModels>& scores) {
  std::array<std::size_t, kNumModels> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::array<int, kNumModels> ranks{};
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = static_cast<int>(pos) + 1;
  return ranks;
}

std::pair<double, double> mean_and_std(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean of empty sequence");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

Experiment1Result run_experiment1(const ExperimentConfig& config, const RunOptions& run) {
  require_id(config, 1);
  // Replications beyond the first are averaged; the default is a single draw.
  std::vector<ReplicationTask> tasks;
  for (std::size_t r = 0; r < config.replications; ++r) {
    tasks.push_back({config.k_values.front(), config.n_values.front(),
                     derive_replication_seed(config.master_seed, 0, 0, r)});
  }
  const auto scores = score_replications(tasks, kernel_options(config), run.execution, run.threads);

  std::array<double, kNumModels> smece_mean{};
  std::array<double, kNumModels> ece_mean{};
  for (std::size_t m = 0; m < kNumModels; ++m) {
    std::vector<double> s;
    std::vector<double> e;
    for (const auto& rep : scores) {
      s.push_back(rep.smece[m]);
      e.push_back(rep.ece[m]);
    }
    smece_mean[m] = mean_and_std(s).first;
    ece_mean[m] = mean_and_std(e).first;
  }
  const auto smece_rank = rank_ascending(smece_mean);
  const auto ece_rank = rank_ascending(ece_mean);

  Experiment1Result result{config, {}};
  for (auto kind : kAllModels) {
    const auto m = model_index(kind);
    result.rows.push_back({kind, smece_mean[m], ece_mean[m], smece_rank[m], ece_rank[m]});
  }
  return result;
}

Experiment2Result run_experiment2(const ExperimentConfig& config, const RunOptions& run) {
  require_id(config, 2);
  const std::size_t reps = config.replications;
  std::vector<ReplicationTask> tasks;
  for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
    for (std::size_t r = 0; r < reps; ++r) {
      tasks.push_back({config.k_values[ki], config.n_values.front(),
                       derive_replication_seed(config.master_seed, ki, 0, r)});
    }
  }
  const auto scores = score_replications(tasks, kernel_options(config), run.execution, run.threads);

  Experiment2Result result{config, {}, {}};
  for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
    std::array<double, kNumModels> s{};
    std::array<double, kNumModels> e{};
    for (std::size_t m = 0; m < kNumModels; ++m) {
      std::vector<double> sv;
      std::vector<double> ev;
      for (std::size_t r = 0; r < reps; ++r) {
        sv.push_back(scores[ki * reps + r].smece[m]);
        ev.push_back(scores[ki * reps + r].ece[m]);
      }
      s[m] = mean_and_std(sv).first;
      e[m] = mean_and_std(ev).first;
    }
    result.smece.push_back(s);
    result.ece.push_back(e);
  }
  return result;
}

Experiment3Result run_experiment3(const ExperimentConfig& config, const RunOptions& run) {
  require_id(config, 3);
  const std::size_t reps = config.replications;
  std::vector<ReplicationTask> tasks;
  for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
    for (std::size_t r = 0; r < reps; ++r) {
      tasks.push_back({config.k_values[ki], config.n_values.front(),
                       derive_replication_seed(config.master_seed, ki, 0, r)});
    }
  }
  const auto scores = score_replications(tasks, kernel_options(config), run.execution, run.threads);

  Experiment3Result result{config, {}, {}};
  for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
    std::vector<ModelScoreMap> s;
    std::vector<ModelScoreMap> e;
    for (std::size_t r = 0; r < reps; ++r) {
      s.push_back(to_map(scores[ki * reps + r].smece));
      e.push_back(to_map(scores[ki * reps + r].ece));
    }
    result.smece.push_back(pairwise_accuracy(s, config.k_values[ki]));
    result.ece.push_back(pairwise_accuracy(e, config.k_values[ki]));
  }
  return result;
}

Experiment4Result run_experiment4(const ExperimentConfig& config, const RunOptions& run) {
  require_id(config, 4);
  const std::size_t reps = config.replications;
  std::vector<ReplicationTask> tasks;
  for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
    for (std::size_t r = 0; r < reps; ++r) {
      tasks.push_back({config.k_values.front(), config.n_values[ni],
                       derive_replication_seed(config.master_seed, 0, ni, r)});
    }
  }
  const auto scores = score_replications(tasks, kernel_options(config), run.execution, run.threads);

  Experiment4Result result{config, {}, {}};
  for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
    std::array<MetricCell, kNumModels> s;
    std::array<MetricCell, kNumModels> e;
    for (std::size_t m = 0; m < kNumModels; ++m) {
      std::vector<double> sv;
      std::vector<double> ev;
      for (std::size_t r = 0; r < reps; ++r) {
        sv.push_back(scores[ni * reps + r].smece[m]);
        ev.push_back(scores[ni * reps + r].ece[m]);
      }
      const auto [smean, sstd] = mean_and_std(sv);
      const auto [emean, estd] = mean_and_std(ev);
      s[m] = {kAllModels[m], Metric::kSmece, smean, sstd, std::nullopt};
      e[m] = {kAllModels[m], Metric::kEce, emean, estd, std::nullopt};
    }
    result.smece.push_back(s);
    result.ece.push_back(e);
  }
  return result;
}

}  // namespace smece
