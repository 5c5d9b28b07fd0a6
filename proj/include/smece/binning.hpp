#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smece {

inline constexpr int kDefaultNumBins = 10;

/// Treatment of a prediction exactly equal to 1.0.
///
/// kClosed puts it in the last bin, so every probability has a bin.
/// kOpen uses strictly half-open bins [(b-1)/B, b/B) for every b: such a
/// prediction belongs to no bin but still counts towards n, so it carries
/// zero weight in every bin term.
enum class TopEdge { kClosed, kOpen };

/// One evaluation record. Construction validates ranges.
class EvalSample {
 public:
  EvalSample(double prediction, double soft_label,
             std::optional<int> hard_label = std::nullopt);

  double prediction() const { return prediction_; }
  double soft_label() const { return soft_label_; }
  bool has_hard_label() const { return hard_label_ >= 0; }
  std::optional<int> hard_label() const {
    return has_hard_label() ? std::optional<int>(hard_label_) : std::nullopt;
  }

 private:
  double prediction_;
  double soft_label_;
  std::int8_t hard_label_;  // -1 when absent
};

struct BinSummary {
  int bin_index = 0;  // 1-based
  std::size_t count = 0;
  double mean_prediction = 0.0;  // 0 for empty bins
  double mean_soft_label = 0.0;
  std::optional<double> hard_fraction;
};

struct CalibrationReport {
  double smece = 0.0;
  std::optional<double> ece;
  double brier_soft = 0.0;
  std::optional<double> brier_hard;
  std::vector<BinSummary> bins;
  std::size_t n = 0;
  int num_bins = kDefaultNumBins;
  TopEdge top_edge = TopEdge::kClosed;
};

enum class ReliabilityTarget { kSoft, kHard };

struct ReliabilityPoint {
  double mean_prediction = 0.0;
  double mean_target = 0.0;
  double weight = 0.0;
};

/// Returns the 1-based bin of `p` among `num_bins` equal-width bins whose
/// edges are the doubles b / num_bins. Returns std::nullopt only for
/// p == 1.0 under TopEdge::kOpen.
std::optional<int> assign_bin(double p, int num_bins,
                              TopEdge top_edge = TopEdge::kClosed);

/// Exactly num_bins summaries in index order. hard_fraction is populated
/// only when every sample carries a hard label; a mix is an error.
std::vector<BinSummary> summarize_bins(std::span<const EvalSample> samples,
                                       int num_bins = kDefaultNumBins,
                                       TopEdge top_edge = TopEdge::kClosed);

/// Bin-weighted |mean prediction - hard positive fraction|.
double ece(std::span<const EvalSample> samples, int num_bins = kDefaultNumBins,
           TopEdge top_edge = TopEdge::kClosed);

/// Bin-weighted |mean prediction - mean soft label|.
double smece(std::span<const EvalSample> samples, int num_bins = kDefaultNumBins,
             TopEdge top_edge = TopEdge::kClosed);

// Weighted sums over precomputed bins; `n` is the full sample count.
double smece_from_bins(std::span<const BinSummary> bins, std::size_t n);
double ece_from_bins(std::span<const BinSummary> bins, std::size_t n);

double brier(std::span<const double> predictions, std::span<const double> targets);

/// One point per non-empty bin; weights are normalised over binned samples.
std::vector<ReliabilityPoint> reliability_points(
    std::span<const EvalSample> samples, int num_bins = kDefaultNumBins,
    ReliabilityTarget target = ReliabilityTarget::kSoft,
    TopEdge top_edge = TopEdge::kClosed);

/// Full report; ECE and hard Brier only when all samples carry hard labels.
CalibrationReport evaluate(std::span<const EvalSample> samples,
                           int num_bins = kDefaultNumBins,
                           TopEdge top_edge = TopEdge::kClosed);

}  // namespace smece
