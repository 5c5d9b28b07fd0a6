#include "smece/report.hpp"

#include "json.hpp"
#include "smece/errors.hpp"

namespace smece {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string model_label(ModelKind kind) {
  return std::string(1, model_letter(kind)) + " - " + std::string(model_name(kind));
}

std::string k_label(double k) { return "k=" + format_shortest(k); }

std::string pair_label(const ModelPair& pair) {
  return std::string(1, model_letter(pair.first)) + " vs " + model_letter(pair.second);
}

std::string title_suffix(const ExperimentConfig& c) {
  return "B=" + std::to_string(c.num_bins) + ", " + std::string(to_string(c.hard_mode)) +
         " labels, seed " + std::to_string(c.master_seed);
}

OutputTable sweep_table(const std::string& title, const std::vector<double>& ks,
                        const std::vector<std::array<double, kNumModels>>& values) {
  OutputTable t;
  t.title = title;
  t.column_names.push_back("model");
  for (double k : ks) t.column_names.push_back(k_label(k));
  for (auto kind : kAllModels) {
    std::vector<Cell> row{model_label(kind)};
    for (const auto& per_k : values) row.emplace_back(per_k[model_index(kind)]);
    t.add_row(std::move(row));
  }
  return t;
}

OutputTable mean_std_table(const std::string& title, const std::vector<std::size_t>& ns,
                           const std::vector<std::array<MetricCell, kNumModels>>& cells) {
  OutputTable t;
  t.title = title;
  t.column_names.push_back("model");
  for (auto n : ns) {
    t.column_names.push_back("n=" + std::to_string(n) + " mean");
    t.column_names.push_back("n=" + std::to_string(n) + " std");
  }
  for (auto kind : kAllModels) {
    std::vector<Cell> row{std::string(1, model_letter(kind))};
    for (const auto& per_n : cells) {
      row.emplace_back(per_n[model_index(kind)].mean);
      row.emplace_back(per_n[model_index(kind)].stddev);
    }
    t.add_row(std::move(row));
  }
  return t;
}

ordered_json config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["experiment_id"] = c.experiment_id;
  j["k_values"] = c.k_values;
  j["n_values"] = c.n_values;
  j["replications"] = c.replications;
  j["num_bins"] = c.num_bins;
  j["master_seed"] = c.master_seed;
  j["hard_mode"] = std::string(to_string(c.hard_mode));
  j["top_edge"] = std::string(to_string(c.top_edge));
  return j;
}

}  // namespace

std::string_view to_string(TopEdge edge) { return edge == TopEdge::kClosed ? "closed" : "open"; }

TopEdge parse_top_edge(std::string_view text) {
  if (text == "closed") return TopEdge::kClosed;
  if (text == "open") return TopEdge::kOpen;
  throw ConfigError("unknown top-edge convention '" + std::string(text) + "'");
}

std::vector<NamedTable> experiment_tables(const Experiment1Result& result) {
  OutputTable t;
  t.title = "Experiment 1: k=" + format_shortest(result.config.k_values.front()) +
            ", n=" + std::to_string(result.config.n_values.front()) + ", " +
            title_suffix(result.config);
  t.column_names = {"model", "smece", "ece", "smece_rank", "ece_rank"};
  for (const auto& row : result.rows) {
    t.add_row({model_label(row.model), row.smece, row.ece,
               static_cast<std::int64_t>(row.smece_rank), static_cast<std::int64_t>(row.ece_rank)});
  }
  return {{"exp1_table2", std::move(t)}};
}

std::vector<NamedTable> experiment_tables(const Experiment2Result& result) {
  const auto& c = result.config;
  const auto suffix = ", n=" + std::to_string(c.n_values.front()) + ", " + title_suffix(c);
  return {{"exp2_table3", sweep_table("SMECE across k" + suffix, c.k_values, result.smece)},
          {"exp2_table4", sweep_table("ECE across k" + suffix, c.k_values, result.ece)}};
}

std::vector<NamedTable> experiment_tables(const Experiment3Result& result) {
  const auto& c = result.config;
  const auto suffix = ", n=" + std::to_string(c.n_values.front()) + ", " +
                      std::to_string(c.replications) + " replications, " + title_suffix(c);

  OutputTable overall;
  overall.title = "Overall ranking accuracy" + suffix;
  overall.precision = 3;
  overall.column_names.push_back("metric");
  for (double k : c.k_values) overall.column_names.push_back(k_label(k));
  std::vector<Cell> srow{std::string("SMECE")};
  std::vector<Cell> erow{std::string("ECE")};
  for (std::size_t i = 0; i < c.k_values.size(); ++i) {
    srow.emplace_back(result.smece[i].overall);
    erow.emplace_back(result.ece[i].overall);
  }
  overall.add_row(std::move(srow));
  overall.add_row(std::move(erow));

  OutputTable pairs;
  pairs.title = "Per-pair ranking accuracy" + suffix;
  pairs.precision = 3;
  pairs.column_names.push_back("pair");
  for (double k : c.k_values) {
    pairs.column_names.push_back("smece@" + k_label(k));
    pairs.column_names.push_back("ece@" + k_label(k));
  }
  for (const auto& pair : GroundTruthOrder::pairs()) {
    std::vector<Cell> row{pair_label(pair)};
    for (std::size_t i = 0; i < c.k_values.size(); ++i) {
      row.emplace_back(result.smece[i].per_pair.at(pair));
      row.emplace_back(result.ece[i].per_pair.at(pair));
    }
    pairs.add_row(std::move(row));
  }
  return {{"exp3_table5", std::move(overall)}, {"exp3_table6", std::move(pairs)}};
}

std::vector<NamedTable> experiment_tables(const Experiment4Result& result) {
  const auto& c = result.config;
  const auto suffix = ", k=" + format_shortest(c.k_values.front()) + ", " +
                      std::to_string(c.replications) + " replications, " + title_suffix(c);
  return {{"exp4_table7", mean_std_table("SMECE mean and std" + suffix, c.n_values, result.smece)},
          {"exp4_table8", mean_std_table("ECE mean and std" + suffix, c.n_values, result.ece)}};
}

std::vector<NamedTable> run_experiment_tables(const ExperimentConfig& config,
                                              const RunOptions& run) {
  config.validate();
  switch (config.experiment_id) {
    case 1: return experiment_tables(run_experiment1(config, run));
    case 2: return experiment_tables(run_experiment2(config, run));
    case 3: return experiment_tables(run_experiment3(config, run));
    case 4: return experiment_tables(run_experiment4(config, run));
  }
  throw ConfigError("experiment id must be 1..4");
}

std::string render_report(const CalibrationReport& report, TableFormat format) {
  if (format == TableFormat::kCsv) {
    OutputTable t;
    t.title = "calibration report";
    t.column_names = {"metric", "value"};
    t.add_row({std::string("smece"), report.smece});
    if (report.ece) t.add_row({std::string("ece"), *report.ece});
    t.add_row({std::string("brier_soft"), report.brier_soft});
    if (report.brier_hard) t.add_row({std::string("brier_hard"), *report.brier_hard});
    t.add_row({std::string("n"), static_cast<std::int64_t>(report.n)});
    t.add_row({std::string("num_bins"), static_cast<std::int64_t>(report.num_bins)});
    return to_csv(t);
  }
  auto round4 = [](double v) { return std::stod(format_fixed(v, 4)); };
  ordered_json j;
  j["smece"] = round4(report.smece);
  j["ece"] = report.ece ? ordered_json(round4(*report.ece)) : ordered_json(nullptr);
  j["brier_soft"] = round4(report.brier_soft);
  j["brier_hard"] = report.brier_hard ? ordered_json(round4(*report.brier_hard))
                                      : ordered_json(nullptr);
  j["n"] = report.n;
  j["num_bins"] = report.num_bins;
  j["top_edge"] = std::string(to_string(report.top_edge));
  auto bins = ordered_json::array();
  for (const auto& b : report.bins) {
    ordered_json jb;
    jb["bin"] = b.bin_index;
    jb["count"] = b.count;
    jb["mean_prediction"] = round4(b.mean_prediction);
    jb["mean_soft_label"] = round4(b.mean_soft_label);
    jb["hard_fraction"] =
        b.hard_fraction ? ordered_json(round4(*b.hard_fraction)) : ordered_json(nullptr);
    bins.push_back(std::move(jb));
  }
  j["bins"] = std::move(bins);
  return j.dump(2) + "\n";
}

OutputTable reliability_table(const std::vector<ReliabilityPoint>& points) {
  OutputTable t;
  t.title = "reliability diagram points";
  t.column_names = {"mean_prediction", "mean_target", "weight"};
  for (const auto& p : points) t.add_row({p.mean_prediction, p.mean_target, p.weight});
  return t;
}

std::string manifest_to_json(const RunManifest& manifest) {
  ordered_json j;
  j["tool"] = "smece";
  j["tool_version"] = manifest.tool_version;
  j["master_seed"] = manifest.config.master_seed;
  j["config"] = config_to_json(manifest.config);
  j["format"] = manifest.format == TableFormat::kCsv ? "csv" : "json";
  j["outputs"] = manifest.outputs;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(std::string_view text) {
  RunManifest m;
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& c = j.at("config");
    m.tool_version = j.at("tool_version").get<std::string>();
    m.config.experiment_id = c.at("experiment_id").get<int>();
    m.config.k_values = c.at("k_values").get<std::vector<double>>();
    m.config.n_values = c.at("n_values").get<std::vector<std::size_t>>();
    m.config.replications = c.at("replications").get<std::size_t>();
    m.config.num_bins = c.at("num_bins").get<int>();
    m.config.master_seed = c.at("master_seed").get<std::uint64_t>();
    m.config.hard_mode = parse_hard_mode(c.at("hard_mode").get<std::string>());
    m.config.top_edge = parse_top_edge(c.at("top_edge").get<std::string>());
    m.format = parse_table_format(j.at("format").get<std::string>());
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(std::string("invalid manifest: ") + e.what());
  }
  m.config.validate();
  return m;
}

}  // namespace smece
