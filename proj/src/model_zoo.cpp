#include "smece/model_zoo.hpp"

#include <algorithm>
#include <string>

#include "smece/errors.hpp"
#include "smece/generative.hpp"

namespace smece {

char model_letter(ModelKind kind) { return static_cast<char>('A' + static_cast<int>(kind)); }

ModelKind parse_model(char letter) {
  if (letter < 'A' || letter > 'E') {
    throw DomainError(std::string("unknown model letter '") + letter + "'");
  }
  return static_cast<ModelKind>(letter - 'A');
}

std::string_view model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kPosteriorMatching: return "Posterior-matching";
    case ModelKind::kOverconfident: return "Overconfident";
    case ModelKind::kUnderconfident: return "Underconfident";
    case ModelKind::kBiasedHigh: return "Biased high";
    case ModelKind::kRandom: return "Random";
  }
  return "";
}

double predict(const ModelSpec& spec, double x, double k, Rng* rng) {
  if ((spec.kind == ModelKind::kRandom) != (rng != nullptr)) {
    throw DomainError(spec.kind == ModelKind::kRandom
                          ? "random model requires a generator"
                          : "generator supplied to a deterministic model");
  }
  switch (spec.kind) {
    case ModelKind::kPosteriorMatching: return posterior(x, k);
    case ModelKind::kOverconfident: return posterior(x, spec.over_factor * k);
    case ModelKind::kUnderconfident: return posterior(x, spec.under_factor * k);
    case ModelKind::kBiasedHigh: return std::clamp(posterior(x, k) + spec.bias, 0.0, 1.0);
    case ModelKind::kRandom: return uniform01(*rng);
  }
  throw DomainError("unhandled model kind");
}

std::array<ModelSpec, kNumModels> default_zoo() {
  std::array<ModelSpec, kNumModels> zoo;
  for (std::size_t i = 0; i < kNumModels; ++i) zoo[i].kind = kAllModels[i];
  return zoo;
}

}  // namespace smece
