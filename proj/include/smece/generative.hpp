#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "smece/random.hpp"

namespace smece {

/// Two equal-prior classes x | y=0 ~ N(-mu, sigma^2), x | y=1 ~ N(+mu, sigma^2).
struct GaussianPair {
  double mu = 1.0;
  double sigma = 1.0;

  void validate() const;
  /// 2 mu / sigma^2, the slope of the posterior log-odds.
  double steepness() const { return 2.0 * mu / (sigma * sigma); }
};

struct GenerativeConfig {
  double k = 2.0;
  double input_low = -3.0;
  double input_high = 3.0;
  std::size_t n = 5000;

  void validate() const;
};

enum class HardMode { kThreshold, kBernoulli };

std::string_view to_string(HardMode mode);
HardMode parse_hard_mode(std::string_view text);

struct LabeledDataset {
  double k = 0.0;
  HardMode hard_mode = HardMode::kThreshold;
  std::vector<double> inputs;
  std::vector<double> soft_labels;
  std::vector<std::uint8_t> hard_labels;

  std::size_t size() const { return inputs.size(); }
};

/// P(y=1 | x) = 1 / (1 + exp(-k x)).
double posterior(double x, double k);

/// Same posterior evaluated from the two class densities by Bayes' rule,
/// P1 / (P0 + P1), in log space so extreme |x| does not underflow to 0/0.
/// Never forms the steepness k. Used as an independent check on posterior().
double posterior_oracle(double x, const GaussianPair& pair);

/// 1[x >= 0]; x = 0 is labelled positive.
int threshold_label(double x);

/// One Bernoulli(p_star) draw: 1 when a uniform draw falls below p_star.
int bernoulli_label(double p_star, Rng& rng);

/// n i.i.d. draws from Uniform[input_low, input_high).
std::vector<double> sample_inputs(const GenerativeConfig& config, Rng& rng);

/// Threshold mode: y = 1[x >= 0]. Bernoulli mode: y ~ Bernoulli(p*(x)),
/// drawn after all inputs from the same generator.
LabeledDataset make_dataset(const GenerativeConfig& config, HardMode mode, Rng& rng);

}  // namespace smece
