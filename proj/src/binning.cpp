#include "smece/binning.hpp"

#include <cmath>
#include <string>

#include "smece/errors.hpp"

namespace smece {

namespace {

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

void require_bins(int num_bins) {
  if (num_bins < 1) {
    throw DomainError("bin count must be >= 1, got " + std::to_string(num_bins));
  }
}

enum class HardPresence { kNone, kAll };

HardPresence hard_presence(std::span<const EvalSample> samples) {
  std::size_t with_hard = 0;
  for (const auto& s : samples) with_hard += s.has_hard_label() ? 1 : 0;
  if (with_hard == 0) return HardPresence::kNone;
  if (with_hard == samples.size()) return HardPresence::kAll;
  throw DomainError("hard labels present on " + std::to_string(with_hard) + " of " +
                    std::to_string(samples.size()) +
                    " samples; either all or none must carry one");
}

}  // namespace

EvalSample::EvalSample(double prediction, double soft_label, std::optional<int> hard_label)
    : prediction_(prediction), soft_label_(soft_label), hard_label_(-1) {
  if (!is_probability(prediction)) {
    throw DomainError("prediction " + std::to_string(prediction) + " outside [0,1]");
  }
  if (!is_probability(soft_label)) {
    throw DomainError("soft label " + std::to_string(soft_label) + " outside [0,1]");
  }
  if (hard_label) {
    if (*hard_label != 0 && *hard_label != 1) {
      throw DomainError("hard label must be 0 or 1, got " + std::to_string(*hard_label));
    }
    hard_label_ = static_cast<std::int8_t>(*hard_label);
  }
}

std::optional<int> assign_bin(double p, int num_bins, TopEdge top_edge) {
  require_bins(num_bins);
  if (!is_probability(p)) {
    throw DomainError("probability " + std::to_string(p) + " outside [0,1]");
  }
  if (p == 1.0) {
    if (top_edge == TopEdge::kOpen) return std::nullopt;
    return num_bins;
  }
  const double scale = static_cast<double>(num_bins);
  int b = static_cast<int>(std::floor(p * scale));  // 0-based guess
  if (b > num_bins - 1) b = num_bins - 1;
  // p * B may round across an edge; settle against the stored edges b / B.
  while (b > 0 && p < static_cast<double>(b) / scale) --b;
  while (b < num_bins - 1 && p >= static_cast<double>(b + 1) / scale) ++b;
  return b + 1;
}

std::vector<BinSummary> summarize_bins(std::span<const EvalSample> samples, int num_bins,
                                       TopEdge top_edge) {
  require_bins(num_bins);
  if (samples.empty()) throw DomainError("cannot summarise an empty sample set");
  const bool with_hard = hard_presence(samples) == HardPresence::kAll;

  std::vector<BinSummary> bins(static_cast<std::size_t>(num_bins));
  std::vector<double> hard_sum(bins.size(), 0.0);
  for (std::size_t i = 0; i < bins.size(); ++i) bins[i].bin_index = static_cast<int>(i) + 1;

  for (const auto& s : samples) {
    const auto b = assign_bin(s.prediction(), num_bins, top_edge);
    if (!b) continue;
    auto& bin = bins[static_cast<std::size_t>(*b - 1)];
    ++bin.count;
    bin.mean_prediction += s.prediction();
    bin.mean_soft_label += s.soft_label();
    if (with_hard) hard_sum[static_cast<std::size_t>(*b - 1)] += *s.hard_label();
  }
  for (std::size_t i = 0; i < bins.size(); ++i) {
    auto& bin = bins[i];
    if (bin.count == 0) {
      if (with_hard) bin.hard_fraction = 0.0;
      continue;
    }
    const double count = static_cast<double>(bin.count);
    bin.mean_prediction /= count;
    bin.mean_soft_label /= count;
    if (with_hard) bin.hard_fraction = hard_sum[i] / count;
  }
  return bins;
}

double smece_from_bins(std::span<const BinSummary> bins, std::size_t n) {
  if (n == 0) throw DomainError("sample count must be positive");
  double total = 0.0;
  for (const auto& bin : bins) {
    if (bin.count == 0) continue;
    const double weight = static_cast<double>(bin.count) / static_cast<double>(n);
    total += weight * std::abs(bin.mean_prediction - bin.mean_soft_label);
  }
  return total;
}

double ece_from_bins(std::span<const BinSummary> bins, std::size_t n) {
  if (n == 0) throw DomainError("sample count must be positive");
  double total = 0.0;
  for (const auto& bin : bins) {
    if (bin.count == 0) continue;
    if (!bin.hard_fraction) throw DomainError("ECE requires hard labels on every sample");
    const double weight = static_cast<double>(bin.count) / static_cast<double>(n);
    total += weight * std::abs(bin.mean_prediction - *bin.hard_fraction);
  }
  return total;
}

double ece(std::span<const EvalSample> samples, int num_bins, TopEdge top_edge) {
  if (!samples.empty() && hard_presence(samples) != HardPresence::kAll) {
    throw DomainError("ECE requires hard labels on every sample");
  }
  const auto bins = summarize_bins(samples, num_bins, top_edge);
  return ece_from_bins(bins, samples.size());
}

double smece(std::span<const EvalSample> samples, int num_bins, TopEdge top_edge) {
  const auto bins = summarize_bins(samples, num_bins, top_edge);
  return smece_from_bins(bins, samples.size());
}

double brier(std::span<const double> predictions, std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    throw DomainError("brier: " + std::to_string(predictions.size()) + " predictions vs " +
                      std::to_string(targets.size()) + " targets");
  }
  if (predictions.empty()) throw DomainError("brier: empty input");
  double total = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double d = predictions[i] - targets[i];
    total += d * d;
  }
  return total / static_cast<double>(predictions.size());
}

std::vector<ReliabilityPoint> reliability_points(std::span<const EvalSample> samples,
                                                 int num_bins, ReliabilityTarget target,
                                                 TopEdge top_edge) {
  const auto bins = summarize_bins(samples, num_bins, top_edge);
  if (target == ReliabilityTarget::kHard && !bins.front().hard_fraction) {
    throw DomainError("hard reliability diagram requires hard labels");
  }
  std::size_t binned = 0;
  for (const auto& bin : bins) binned += bin.count;

  std::vector<ReliabilityPoint> points;
  for (const auto& bin : bins) {
    if (bin.count == 0) continue;
    points.push_back({bin.mean_prediction,
                      target == ReliabilityTarget::kSoft ? bin.mean_soft_label
                                                         : *bin.hard_fraction,
                      static_cast<double>(bin.count) / static_cast<double>(binned)});
  }
  return points;
}

CalibrationReport evaluate(std::span<const EvalSample> samples, int num_bins,
                           TopEdge top_edge) {
  CalibrationReport report;
  report.bins = summarize_bins(samples, num_bins, top_edge);
  report.n = samples.size();
  report.num_bins = num_bins;
  report.top_edge = top_edge;
  report.smece = smece_from_bins(report.bins, report.n);

  std::vector<double> predictions;
  std::vector<double> soft;
  predictions.reserve(samples.size());
  soft.reserve(samples.size());
  for (const auto& s : samples) {
    predictions.push_back(s.prediction());
    soft.push_back(s.soft_label());
  }
  report.brier_soft = brier(predictions, soft);

  if (report.bins.front().hard_fraction) {
    report.ece = ece_from_bins(report.bins, report.n);
    std::vector<double> hard;
    hard.reserve(samples.size());
    for (const auto& s : samples) hard.push_back(*s.hard_label());
    report.brier_hard = brier(predictions, hard);
  }
  return report;
}

}  // namespace smece
