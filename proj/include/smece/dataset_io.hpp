#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "smece/binning.hpp"
#include "smece/generative.hpp"
#include "smece/model_zoo.hpp"

namespace smece {

/// Simulated dataset schema: x,p_star,y_hard,p_hat_A,...,p_hat_E, numbers in
/// shortest round-trip form.
std::string dataset_to_csv(const LabeledDataset& dataset,
                           const std::array<std::vector<double>, kNumModels>& predictions);

/// Which columns of a CSV hold the prediction / soft / hard label. The
/// defaults match the reduced schema prediction,soft_label[,hard_label].
struct ColumnSelection {
  std::string prediction = "prediction";
  std::string soft_label = "soft_label";
  std::string hard_label = "hard_label";
};

struct LoadedSamples {
  std::vector<EvalSample> samples;
  /// False when the hard-label column is absent or only partly filled; the
  /// samples then carry no hard labels.
  bool hard_labels_complete = false;
  std::size_t hard_labels_present = 0;
};

/// Parses CSV text. Errors name the 1-based line and column.
LoadedSamples parse_samples_csv(std::string_view text, const ColumnSelection& columns = {});

/// Parses {"samples": [{"prediction": p, "soft_label": s, "hard_label": 0|1}, ...]}
/// or a bare array of such objects.
LoadedSamples parse_samples_json(std::string_view text, const ColumnSelection& columns = {});

/// Dispatches on extension (.json, anything else CSV).
LoadedSamples load_samples(const std::filesystem::path& path, const ColumnSelection& columns = {});

std::string read_text_file(const std::filesystem::path& path);
/// Creates parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace smece
