#include "smece/generative.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smece/errors.hpp"

namespace smece {

void GaussianPair::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu must be positive");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
}

void GenerativeConfig::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ConfigError("k must be positive and finite, got " + std::to_string(k));
  }
  if (!(input_low < input_high) || !std::isfinite(input_low) || !std::isfinite(input_high)) {
    throw ConfigError("input range must satisfy low < high");
  }
  if (n < 1) throw ConfigError("n must be >= 1");
}

std::string_view to_string(HardMode mode) {
  return mode == HardMode::kThreshold ? "threshold" : "bernoulli";
}

HardMode parse_hard_mode(std::string_view text) {
  if (text == "threshold") return HardMode::kThreshold;
  if (text == "bernoulli") return HardMode::kBernoulli;
  throw ConfigError("unknown hard-label mode '" + std::string(text) + "'");
}

double posterior(double x, double k) {
  if (!std::isfinite(x)) throw DomainError("posterior: input must be finite");
  if (!(k > 0.0)) throw DomainError("posterior: k must be positive");
  return 1.0 / (1.0 + std::exp(-k * x));
}

double posterior_oracle(double x, const GaussianPair& pair) {
  pair.validate();
  if (!std::isfinite(x)) throw DomainError("posterior_oracle: input must be finite");
  const double var = pair.sigma * pair.sigma;
  const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * var);
  const double log_p0 = log_norm - (x + pair.mu) * (x + pair.mu) / (2.0 * var);
  const double log_p1 = log_norm - (x - pair.mu) * (x - pair.mu) / (2.0 * var);
  const double shift = std::max(log_p0, log_p1);
  const double p0 = std::exp(log_p0 - shift);
  const double p1 = std::exp(log_p1 - shift);
  return p1 / (p0 + p1);
}

int threshold_label(double x) { return x >= 0.0 ? 1 : 0; }

int bernoulli_label(double p_star, Rng& rng) { return uniform01(rng) < p_star ? 1 : 0; }

std::vector<double> sample_inputs(const GenerativeConfig& config, Rng& rng) {
  config.validate();
  const double width = config.input_high - config.input_low;
  std::vector<double> xs(config.n);
  for (auto& x : xs) x = config.input_low + width * uniform01(rng);
  return xs;
}

LabeledDataset make_dataset(const GenerativeConfig& config, HardMode mode, Rng& rng) {
  LabeledDataset data;
  data.k = config.k;
  data.hard_mode = mode;
  data.inputs = sample_inputs(config, rng);
  data.soft_labels.resize(data.inputs.size());
  data.hard_labels.resize(data.inputs.size());
  for (std::size_t i = 0; i < data.inputs.size(); ++i) {
    data.soft_labels[i] = posterior(data.inputs[i], config.k);
  }
  if (mode == HardMode::kThreshold) {
    for (std::size_t i = 0; i < data.inputs.size(); ++i) {
      data.hard_labels[i] = static_cast<std::uint8_t>(threshold_label(data.inputs[i]));
    }
  } else {
    for (std::size_t i = 0; i < data.inputs.size(); ++i) {
      data.hard_labels[i] = static_cast<std::uint8_t>(bernoulli_label(data.soft_labels[i], rng));
    }
  }
  return data;
}

}  // namespace smece
