#include "smece/commands.hpp"

#include <ostream>

#include "smece/errors.hpp"
#include "smece/model_zoo.hpp"
#include "smece/replication.hpp"
#include "smece/report.hpp"

namespace smece {

namespace {

void emit(const std::string& text, const std::optional<std::filesystem::path>& path,
          std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

LoadedSamples load_for_metrics(const std::filesystem::path& input, const ColumnSelection& columns,
                               std::ostream& log) {
  auto loaded = load_samples(input, columns);
  if (!loaded.hard_labels_complete && loaded.hard_labels_present > 0) {
    log << "warning: hard labels on " << loaded.hard_labels_present << " of "
        << loaded.samples.size() << " rows; ignoring them (ECE not computed)\n";
  }
  return loaded;
}

}  // namespace

CalibrationReport cmd_metrics(const MetricsArgs& args, std::ostream& out, std::ostream& log) {
  if (args.num_bins < 1) throw ConfigError("--bins must be >= 1");
  const auto loaded = load_for_metrics(args.input, args.columns, log);
  auto report = evaluate(loaded.samples, args.num_bins, args.top_edge);
  emit(render_report(report, args.format), args.out, out);
  return report;
}

void cmd_simulate(const SimulateArgs& args) {
  GenerativeConfig config;
  config.k = args.k;
  config.n = args.n;
  config.validate();
  Rng rng(args.seed);
  const auto data = make_dataset(config, args.hard_mode, rng);
  const auto predictions = predict_all(data, default_zoo(), rng);
  write_text_file(args.out, dataset_to_csv(data, predictions));
}

std::vector<ExperimentConfig> resolve_experiment_configs(const ExperimentArgs& args) {
  if (args.manifest) {
    return {manifest_from_json(read_text_file(*args.manifest)).config};
  }
  std::vector<int> ids = args.experiment_ids;
  if (ids.empty()) ids = {1, 2, 3, 4};
  std::vector<ExperimentConfig> configs;
  for (int id : ids) {
    auto c = default_config(id);
    if (args.k_values) c.k_values = *args.k_values;
    if (args.n_values) c.n_values = *args.n_values;
    if (args.replications) c.replications = *args.replications;
    if (args.num_bins) c.num_bins = *args.num_bins;
    if (args.hard_mode) c.hard_mode = *args.hard_mode;
    if (args.top_edge) c.top_edge = *args.top_edge;
    c.master_seed = args.seed;
    c.validate();
    configs.push_back(std::move(c));
  }
  return configs;
}

std::vector<std::filesystem::path> cmd_experiment(const ExperimentArgs& args, std::ostream& log) {
  const auto configs = resolve_experiment_configs(args);
  TableFormat format = args.format;
  if (args.manifest) format = manifest_from_json(read_text_file(*args.manifest)).format;

  std::vector<std::filesystem::path> written;
  for (const auto& config : configs) {
    const auto tables = run_experiment_tables(config, args.run);
    RunManifest manifest;
    manifest.config = config;
    manifest.format = format;
    for (const auto& named : tables) {
      const auto path = args.out_dir / (named.stem + std::string(file_extension(format)));
      write_text_file(path, render(named.table, format));
      manifest.outputs.push_back(path.filename().string());
      written.push_back(path);
    }
    const auto manifest_path =
        args.out_dir / ("manifest_exp" + std::to_string(config.experiment_id) + ".json");
    write_text_file(manifest_path, manifest_to_json(manifest));
    written.push_back(manifest_path);
    log << "experiment " << config.experiment_id << ": wrote " << tables.size()
        << " table(s) to " << args.out_dir.string() << "\n";
  }
  return written;
}

std::vector<ReliabilityPoint> cmd_reliability(const ReliabilityArgs& args, std::ostream& out) {
  if (args.num_bins < 1) throw ConfigError("--bins must be >= 1");
  const auto loaded = load_samples(args.input, args.columns);
  if (args.target == ReliabilityTarget::kHard && !loaded.hard_labels_complete) {
    throw DomainError("hard reliability diagram requires a fully populated hard-label column");
  }
  auto points = reliability_points(loaded.samples, args.num_bins, args.target, args.top_edge);
  auto table = reliability_table(points);
  table.precision = kShortestRoundTrip;
  emit(render(table, args.format), args.out, out);
  return points;
}

int exit_code_for_current_exception(std::ostream& log) {
  try {
    throw;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataFormatError& e) {
    log << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const DomainError& e) {
    log << "validation error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace smece
