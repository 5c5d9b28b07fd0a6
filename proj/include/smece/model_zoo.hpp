#pragma once

#include <array>
#include <string_view>

#include "smece/random.hpp"

namespace smece {

enum class ModelKind { kPosteriorMatching, kOverconfident, kUnderconfident, kBiasedHigh, kRandom };

inline constexpr std::array<ModelKind, 5> kAllModels = {
    ModelKind::kPosteriorMatching, ModelKind::kOverconfident, ModelKind::kUnderconfident,
    ModelKind::kBiasedHigh, ModelKind::kRandom};

inline constexpr std::size_t kNumModels = kAllModels.size();

/// 'A'..'E', the letters used in every emitted table.
char model_letter(ModelKind kind);
ModelKind parse_model(char letter);
std::string_view model_name(ModelKind kind);
inline std::size_t model_index(ModelKind kind) { return static_cast<std::size_t>(kind); }

struct ModelSpec {
  ModelKind kind = ModelKind::kPosteriorMatching;
  double over_factor = 3.0;
  double under_factor = 0.4;
  double bias = 0.15;
};

/// A: sigma(kx)  B: sigma(over*k*x)  C: sigma(under*k*x)
/// D: min(sigma(kx) + bias, 1)  E: Uniform(0,1), one draw from `rng`.
/// `rng` must be non-null exactly when kind is kRandom.
double predict(const ModelSpec& spec, double x, double k, Rng* rng = nullptr);

std::array<ModelSpec, kNumModels> default_zoo();

}  // namespace smece
