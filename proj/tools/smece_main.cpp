// Command-line front end: metrics, simulate, experiment, reliability.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "smece/commands.hpp"
#include "smece/errors.hpp"
#include "smece/report.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv(smece::kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw smece::ConfigError(std::string(smece::kSeedEnvVar) + " is not an integer: " + env);
    }
  }
  return smece::kDefaultMasterSeed;
}

void add_columns(CLI::App* cmd, smece::ColumnSelection& columns) {
  cmd->add_option("--prediction-col", columns.prediction, "Prediction column name");
  cmd->add_option("--soft-col", columns.soft_label, "Soft label column name");
  cmd->add_option("--hard-col", columns.hard_label, "Hard label column name");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calibration metrics (SMECE, ECE, Brier) and simulation experiments"};
  app.set_version_flag("--version", std::string(smece::kToolVersion));
  app.require_subcommand(1);

  std::string format = "csv";
  std::string top_edge;
  std::string hard_mode = "threshold";
  std::string target = "soft";
  std::string out;
  std::optional<std::uint64_t> seed;

  smece::MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "SMECE/ECE/Brier report for a sample file");
  metrics_cmd->add_option("input", metrics.input, "CSV or JSON sample file")->required();
  metrics_cmd->add_option("--bins", metrics.num_bins, "Number of equal-width bins")
      ->capture_default_str();
  metrics_cmd->add_option("--format", format, "csv or json");
  metrics_cmd->add_option("--out", out, "Output file (default stdout)");
  metrics_cmd->add_option("--top-edge", top_edge, "closed (default) or open");
  add_columns(metrics_cmd, metrics.columns);

  smece::SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Write a simulated dataset with model predictions");
  simulate_cmd->add_option("--k", simulate.k, "Posterior steepness")->capture_default_str();
  simulate_cmd->add_option("--n", simulate.n, "Sample count")->capture_default_str();
  simulate_cmd->add_option("--hard-mode", hard_mode, "threshold or bernoulli");
  simulate_cmd->add_option("--seed", seed, "Seed (default $SMECE_SEED or built-in)");
  simulate_cmd->add_option("--out", out, "Output CSV")->required();

  smece::ExperimentArgs experiment;
  std::vector<std::string> ids;
  std::vector<double> ks;
  std::vector<std::size_t> ns;
  std::size_t reps = 0;
  int bins = 0;
  std::string manifest;
  bool serial = false;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run experiments 1-4 and write tables");
  experiment_cmd->add_option("id", ids, "Experiment ids 1..4 or 'all' (default all)");
  experiment_cmd->add_option("--k", ks, "Override k values")->delimiter(',');
  experiment_cmd->add_option("--n", ns, "Override n values")->delimiter(',');
  experiment_cmd->add_option("--reps", reps, "Override replication count");
  experiment_cmd->add_option("--bins", bins, "Override bin count");
  experiment_cmd->add_option("--hard-mode", hard_mode, "threshold or bernoulli");
  experiment_cmd->add_option("--top-edge", top_edge, "open (default) or closed");
  experiment_cmd->add_option("--seed", seed, "Master seed (default $SMECE_SEED or built-in)");
  experiment_cmd->add_option("--format", format, "csv or json");
  experiment_cmd->add_option("--out", out, "Output directory (default ./results)");
  experiment_cmd->add_option("--manifest", manifest, "Replay the run described by a manifest");
  experiment_cmd->add_option("--threads", experiment.run.threads, "OpenMP threads (0 = default)");
  experiment_cmd->add_flag("--serial", serial, "Use the serial reference kernel");

  smece::ReliabilityArgs reliability;
  auto* reliability_cmd = app.add_subcommand("reliability", "Reliability-diagram points");
  reliability_cmd->add_option("input", reliability.input, "CSV or JSON sample file")->required();
  reliability_cmd->add_option("--bins", reliability.num_bins, "Number of bins")->capture_default_str();
  reliability_cmd->add_option("--target", target, "soft or hard");
  reliability_cmd->add_option("--format", format, "csv or json");
  reliability_cmd->add_option("--out", out, "Output file (default stdout)");
  reliability_cmd->add_option("--top-edge", top_edge, "closed (default) or open");
  add_columns(reliability_cmd, reliability.columns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? smece::kExitOk : smece::kExitConfig;
  }

  return smece::run_guarded(
      [&] {
        const auto fmt = smece::parse_table_format(format);
        if (*metrics_cmd) {
          metrics.format = fmt;
          if (!out.empty()) metrics.out = out;
          if (!top_edge.empty()) metrics.top_edge = smece::parse_top_edge(top_edge);
          smece::cmd_metrics(metrics, std::cout, std::cerr);
        } else if (*simulate_cmd) {
          simulate.hard_mode = smece::parse_hard_mode(hard_mode);
          simulate.seed = seed ? *seed : default_seed();
          simulate.out = out;
          smece::cmd_simulate(simulate);
        } else if (*experiment_cmd) {
          for (const auto& id : ids) {
            if (id == "all") continue;
            try {
              experiment.experiment_ids.push_back(std::stoi(id));
            } catch (const std::exception&) {
              throw smece::ConfigError("experiment id must be 1..4 or 'all', got '" + id + "'");
            }
          }
          if (!ks.empty()) experiment.k_values = ks;
          if (!ns.empty()) experiment.n_values = ns;
          if (experiment_cmd->count("--reps")) experiment.replications = reps;
          if (experiment_cmd->count("--bins")) experiment.num_bins = bins;
          if (experiment_cmd->count("--hard-mode")) {
            experiment.hard_mode = smece::parse_hard_mode(hard_mode);
          }
          if (!top_edge.empty()) experiment.top_edge = smece::parse_top_edge(top_edge);
          experiment.seed = seed ? *seed : default_seed();
          experiment.format = fmt;
          if (!out.empty()) experiment.out_dir = out;
          if (!manifest.empty()) experiment.manifest = manifest;
          if (serial) experiment.run.execution = smece::Execution::kSerial;
          smece::cmd_experiment(experiment, std::cerr);
        } else if (*reliability_cmd) {
          reliability.format = fmt;
          reliability.target = target == "hard" ? smece::ReliabilityTarget::kHard
                               : target == "soft"
                                   ? smece::ReliabilityTarget::kSoft
                                   : throw smece::ConfigError("--target must be soft or hard");
          if (!out.empty()) reliability.out = out;
          if (!top_edge.empty()) reliability.top_edge = smece::parse_top_edge(top_edge);
          smece::cmd_reliability(reliability, std::cout);
        }
      },
      std::cerr);
}
