#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "smece/binning.hpp"
#include "smece/experiments.hpp"
#include "smece/table.hpp"

namespace smece {

inline constexpr const char* kToolVersion = "0.1.0";

/// A table plus the file stem it is written under, e.g. "exp2_table3".
struct NamedTable {
  std::string stem;
  OutputTable table;
};

// Stems: exp1_table2; exp2_table3/4; exp3_table5/6; exp4_table7/8.
std::vector<NamedTable> experiment_tables(const Experiment1Result& result);
std::vector<NamedTable> experiment_tables(const Experiment2Result& result);
std::vector<NamedTable> experiment_tables(const Experiment3Result& result);
std::vector<NamedTable> experiment_tables(const Experiment4Result& result);

/// Runs the configured experiment and returns its tables.
std::vector<NamedTable> run_experiment_tables(const ExperimentConfig& config,
                                              const RunOptions& run = {});

/// CSV: metric,value summary rows. JSON: full report including bins.
std::string render_report(const CalibrationReport& report, TableFormat format);

OutputTable reliability_table(const std::vector<ReliabilityPoint>& points);

std::string_view to_string(TopEdge edge);
TopEdge parse_top_edge(std::string_view text);

/// Everything needed to regenerate an experiment's outputs byte for byte.
/// Parallelism settings are deliberately absent: they do not affect output.
struct RunManifest {
  std::string tool_version = kToolVersion;
  ExperimentConfig config;
  TableFormat format = TableFormat::kCsv;
  std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);
/// Throws DataFormatError / ConfigError.
RunManifest manifest_from_json(std::string_view text);

}  // namespace smece
