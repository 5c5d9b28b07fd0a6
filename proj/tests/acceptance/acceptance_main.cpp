// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smece/binning.hpp"
#include "smece/commands.hpp"
#include "smece/dataset_io.hpp"
#include "smece/experiments.hpp"
#include "smece/generative.hpp"
#include "smece/random.hpp"
#include "smece/replication.hpp"

namespace fs = std::filesystem;
using namespace smece;

namespace {

constexpr auto kA = ModelKind::kPosteriorMatching;
constexpr auto kB = ModelKind::kOverconfident;
constexpr auto kC = ModelKind::kUnderconfident;
constexpr auto kD = ModelKind::kBiasedHigh;
constexpr auto kE = ModelKind::kRandom;

std::size_t idx(ModelKind k) { return model_index(k); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& out) : out_(out) {}
  void require(bool cond, const std::string& what) {
    if (!cond) {
      out_.pass = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += "FAILED " + what;
    }
  }
  void note(const std::string& text) {
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += text;
  }

 private:
  Outcome& out_;
};

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

const std::vector<double> kSweepK = {0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
const std::vector<std::size_t> kSweepN = {500, 1000, 2000, 5000, 10000};
constexpr std::uint64_t kSeed = kDefaultMasterSeed;

// 1. SMECE(A) is exactly zero with zero variance at every (k, n).
Outcome criterion1() {
  Outcome out;
  Checker c(out);
  std::vector<ReplicationTask> tasks;
  for (std::size_t ki = 0; ki < kSweepK.size(); ++ki) {
    for (std::size_t ni = 0; ni < kSweepN.size(); ++ni) {
      for (std::size_t r = 0; r < 100; ++r) {
        tasks.push_back({kSweepK[ki], kSweepN[ni], derive_replication_seed(kSeed + 1, ki, ni, r)});
      }
    }
  }
  const auto scores = score_replications_parallel(tasks, KernelOptions{});
  std::size_t nonzero = 0;
  for (std::size_t cell = 0; cell < kSweepK.size() * kSweepN.size(); ++cell) {
    std::vector<double> v;
    for (std::size_t r = 0; r < 100; ++r) v.push_back(scores[cell * 100 + r].smece[idx(kA)]);
    const auto [mean, sd] = mean_and_std(v);
    if (mean != 0.0 || sd != 0.0) ++nonzero;
    for (double s : v) nonzero += s != 0.0 ? 1 : 0;
  }
  c.require(nonzero == 0, std::to_string(nonzero) + " non-zero SMECE(A) values");
  c.note(std::to_string(tasks.size()) + " replications, all exactly 0");
  return out;
}

// 2. ECE(A) structural floor 0.1151 +/- 0.003 with shrinking spread.
Outcome criterion2() {
  Outcome out;
  Checker c(out);
  auto config = default_config(4);
  config.n_values = {500, 1000, 5000, 10000};
  config.replications = 500;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment4(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
    const auto& cell = r.ece[ni][idx(kA)];
    c.require(std::abs(cell.mean - 0.1151) <= 0.003,
              "mean ECE(A) at n=" + std::to_string(config.n_values[ni]) + " = " + num(cell.mean));
    c.note("n=" + std::to_string(config.n_values[ni]) + ": " + num(cell.mean) + "+/-" +
           num(cell.stddev));
  }
  c.require(r.ece.back()[idx(kA)].stddev < r.ece.front()[idx(kA)].stddev,
            "std at n=10000 not below std at n=500");
  c.require(secs < 30.0, "runtime " + num(secs, 1) + " s exceeds 30 s");
  return out;
}

// 3. ECE ranks B above A, SMECE ranks A first and B second, on 20 seeds.
Outcome criterion3() {
  Outcome out;
  Checker c(out);
  int held = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto config = default_config(1);
    config.master_seed = 1000 + s;
    const auto r = run_experiment1(config);
    const bool ok = r.rows[idx(kB)].ece_rank < r.rows[idx(kA)].ece_rank &&
                    r.rows[idx(kA)].smece_rank == 1 && r.rows[idx(kB)].smece_rank == 2;
    held += ok ? 1 : 0;
  }
  c.require(held == 20, "inversion held on " + std::to_string(held) + "/20 seeds");
  c.note("held on " + std::to_string(held) + "/20 seeds");
  return out;
}

// 4. Single-draw Experiment 1 values on fresh seeds, +/- 0.01.
Outcome criterion4() {
  Outcome out;
  Checker c(out);
  struct Target {
    const char* label;
    ModelKind model;
    Metric metric;
    double value;
  };
  const Target targets[] = {{"ECE(A)", kA, Metric::kEce, 0.1159},
                            {"ECE(B)", kB, Metric::kEce, 0.0401},
                            {"SMECE(B)", kB, Metric::kSmece, 0.0759},
                            {"SMECE(C)", kC, Metric::kSmece, 0.1369},
                            {"SMECE(D)", kD, Metric::kSmece, 0.0977}};
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto config = default_config(1);
    config.master_seed = 5000 + s;
    const auto r = run_experiment1(config);
    for (const auto& t : targets) {
      const auto& row = r.rows[idx(t.model)];
      const double got = t.metric == Metric::kEce ? row.ece : row.smece;
      worst = std::max(worst, std::abs(got - t.value));
      c.require(std::abs(got - t.value) <= 0.01,
                std::string(t.label) + " = " + num(got) + " on seed " + std::to_string(5000 + s));
    }
  }
  c.note("10 seeds, max deviation " + num(worst));
  return out;
}

// 5. Experiment 3 ranking accuracies.
Outcome criterion5() {
  Outcome out;
  Checker c(out);
  const auto config = default_config(3);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_experiment3(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto at = [&](double k) {
    const auto it = std::find(config.k_values.begin(), config.k_values.end(), k);
    return static_cast<std::size_t>(it - config.k_values.begin());
  };
  const double ece_low = r.ece[at(0.5)].overall;
  c.require(std::abs(ece_low - 0.403) <= 0.05, "overall ECE at k=0.5 = " + num(ece_low, 3));
  c.require(r.smece[at(5.0)].overall == 1.0, "overall SMECE at k=5 = " + num(r.smece[at(5.0)].overall, 3));
  c.require(r.smece[at(10.0)].overall == 1.0,
            "overall SMECE at k=10 = " + num(r.smece[at(10.0)].overall, 3));
  const auto k2 = at(2.0);
  c.require(r.smece[k2].per_pair.at({kA, kB}) == 1.0, "SMECE (A,B) at k=2 not 1");
  c.require(r.ece[k2].per_pair.at({kA, kB}) == 0.0, "ECE (A,B) at k=2 not 0");
  c.require(r.smece[k2].per_pair.at({kC, kD}) == 0.0, "SMECE (C,D) at k=2 not 0");
  c.require(r.ece[k2].per_pair.at({kC, kD}) == 0.0, "ECE (C,D) at k=2 not 0");
  c.require(secs < 60.0, "runtime " + num(secs, 1) + " s exceeds 60 s");
  c.note("ECE@0.5=" + num(ece_low, 3) + ", SMECE@5=" + num(r.smece[at(5.0)].overall, 3) +
         ", SMECE@10=" + num(r.smece[at(10.0)].overall, 3) + ", " + num(secs, 1) + " s");
  return out;
}

// 6. Metrics converge at k=50; ECE(A) > ECE(E) at k=0.5.
Outcome criterion6() {
  Outcome out;
  Checker c(out);
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto config = default_config(2);
    config.master_seed = kSeed + s;
    const auto r = run_experiment2(config);
    const auto& smece50 = r.smece.back();
    const auto& ece50 = r.ece.back();
    for (auto m : {kB, kC, kD, kE}) {
      const double gap = std::abs(smece50[idx(m)] - ece50[idx(m)]);
      worst = std::max(worst, gap);
      c.require(gap < 0.02, std::string("|SMECE-ECE| for ") + model_letter(m) + " = " + num(gap));
    }
    c.require(r.ece.front()[idx(kA)] > r.ece.front()[idx(kE)],
              "ECE(A) <= ECE(E) at k=0.5 on seed " + std::to_string(config.master_seed));
  }
  c.note("10 seeds, max |SMECE-ECE| at k=50 " + num(worst));
  return out;
}

// 7. SMECE == ECE on binary soft labels.
Outcome criterion7() {
  Outcome out;
  Checker c(out);
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + gen() % 2000;
    const double rate = u(gen);
    std::vector<EvalSample> samples;
    for (std::size_t i = 0; i < n; ++i) {
      const int y = u(gen) < rate ? 1 : 0;
      samples.emplace_back(u(gen), static_cast<double>(y), y);
    }
    worst = std::max(worst, std::abs(smece::smece(samples) - smece::ece(samples)));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max |SMECE-ECE| = %.3g", worst);
  c.require(worst <= 1e-15, buf);
  c.note(std::string("1000 datasets, ") + buf);
  return out;
}

// 8. Density-ratio posterior agrees with the sigmoid.
Outcome criterion8() {
  Outcome out;
  Checker c(out);
  const GaussianPair pairs[] = {{1, 1}, {2, 1}, {1, 2}, {5, 1}};
  double worst = 0.0;
  for (const auto& p : pairs) {
    for (int i = 0; i <= 1000; ++i) {
      const double x = -3.0 + 6.0 * i / 1000.0;
      worst = std::max(worst, std::abs(posterior_oracle(x, p) - posterior(x, p.steepness())));
    }
  }
  c.require(worst < 1e-12, "max deviation " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max deviation %.3g", worst);
  c.note(buf);
  return out;
}

// 9. Two samples straddling tau in one bin: hard-vs-soft gap |tau - 0.5|.
Outcome criterion9() {
  Outcome out;
  Checker c(out);
  const double eps = 0.01;
  for (double tau : {0.3, 0.5, 0.7}) {
    const std::vector<EvalSample> samples = {{tau - eps, tau - eps, 0}, {tau + eps, tau + eps, 1}};
    // B = 3 puts each pair inside a single bin.
    const auto bins = summarize_bins(samples, 3);
    const auto it = std::find_if(bins.begin(), bins.end(),
                                 [](const BinSummary& b) { return b.count > 0; });
    c.require(it->count == 2, "pair split across bins at tau=" + num(tau, 1));
    const double gap = std::abs(it->mean_soft_label - *it->hard_fraction);
    c.require(std::abs(gap - std::abs(tau - 0.5)) <= 1e-12, "gap at tau=" + num(tau, 1) + " = " + num(gap, 15));
    if (tau == 0.5) c.require(gap == 0.0, "gap at tau=0.5 not exactly 0");
    c.note("tau=" + num(tau, 1) + " gap=" + num(gap, 12));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> snapshot(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    files.emplace_back(entry.path().filename().string(), read_text_file(entry.path()));
  }
  std::sort(files.begin(), files.end());
  return files;
}

// 10. Full suite byte-identical across runs and parallelism settings.
Outcome criterion10() {
  Outcome out;
  Checker c(out);
  const auto root = fs::temp_directory_path() / "smece_acceptance_determinism";
  fs::remove_all(root);
  std::ostringstream log;
  const RunOptions settings[] = {{Execution::kSerial, 0}, {Execution::kParallel, 4},
                                 {Execution::kParallel, 3}};
  std::vector<std::vector<std::pair<std::string, std::string>>> runs;
  for (std::size_t i = 0; i < std::size(settings); ++i) {
    ExperimentArgs args;
    args.seed = kSeed;
    args.out_dir = root / ("run" + std::to_string(i));
    args.run = settings[i];
    cmd_experiment(args, log);
    runs.push_back(snapshot(args.out_dir));
  }
  c.require(runs[0].size() == 11, "expected 11 files, found " + std::to_string(runs[0].size()));
  for (std::size_t i = 1; i < runs.size(); ++i) {
    c.require(runs[i] == runs[0], "run " + std::to_string(i) + " differs from the serial run");
  }
  fs::remove_all(root);
  c.note(std::to_string(runs[0].size()) + " files identical across serial, 4- and 3-thread runs");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1. SMECE(A) exactly zero, zero variance", criterion1},
      {"2. ECE(A) structural floor 0.1151 +/- 0.003", criterion2},
      {"3. Experiment-1 inversion on 20 seeds", criterion3},
      {"4. Experiment-1 reference values +/- 0.01", criterion4},
      {"5. Ranking accuracies (Experiment 3)", criterion5},
      {"6. k-sweep convergence and low-k inversion", criterion6},
      {"7. SMECE == ECE on binary labels (1e-15)", criterion7},
      {"8. Density-ratio posterior oracle (1e-12)", criterion8},
      {"9. Straddling-pair fixture (1e-12)", criterion9},
      {"10. Byte-identical outputs across parallelism", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %s  (%s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
