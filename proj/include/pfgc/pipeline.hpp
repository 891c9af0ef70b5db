#pragma once

#include "pfgc/dataset.hpp"
#include "pfgc/model.hpp"
#include "pfgc/theorem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfgc {

// Resolved configuration for the dataset-driven subcommands. Every field has
// a default; JSON config files use these exact key names (snake_case) and
// flags mirror them in kebab-case. Unknown JSON keys are rejected.
struct RunConfig {
  std::string dataset;
  std::string format = "webkb";
  double epsilon = 0.01;
  int top_k = 5;
  double mu = 0.5;
  int k_order = 1;
  double gamma1 = 1.0;
  double gamma2 = 0.1;
  double lr = 1e-3;
  int epochs = 200;
  int warmup_epochs = 50;
  double beta = 1.0;
  std::vector<int> hidden_dims = {256, 64};
  int se_ratio = 4;
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};
  std::string filter_combo = "PFGC";
  int n_clusters = 0;
  std::string cache_dir;
  std::string out_dir = ".";
  bool allow_large = false;
  int jobs = 1;
  // Grid axes; an empty axis means the singleton {base value}.
  std::vector<double> grid_epsilon;
  std::vector<double> grid_mu;
  std::vector<double> grid_gamma1;
  std::vector<double> grid_gamma2;
  std::vector<double> grid_lr;
};

// Parses a JSON config file into `config`, overwriting only the keys present.
void apply_config_file(RunConfig& config, const std::string& path);

// Serialized echo of the full resolved config (deterministic key order).
std::string config_echo_json(const RunConfig& config);

ModelConfig model_config_from(const RunConfig& config, std::uint64_t seed);

// Loads the dataset named by the config, enforcing the large-N guard.
AttributedGraph load_configured_graph(const RunConfig& config);

// Subcommand bodies. All throw pfgc::Error on failure; file outputs land in
// config.out_dir with fixed names.
void run_restructure(const RunConfig& config);
void run_train(const RunConfig& config);
void run_evaluate(const RunConfig& config, const std::string& checkpoint,
                  bool mask_report);
void run_commonality(const RunConfig& config);
void run_grid(const RunConfig& config, bool default_lattice);

struct TheoremRunConfig {
  int n_nodes = 120;
  int n_clusters = 3;
  std::string sweep = "r=0.05:0.95:0.1";
  int trials = 200;
  double avg_degree = 10.0;
  std::uint64_t seed = 0;
  std::string out = "report.csv";
};

void apply_theorem_config_file(TheoremRunConfig& config,
                               const std::string& path);

// Expands "r=<start>:<end>:<step>" into target ratios.
std::vector<double> parse_sweep(const std::string& sweep);

std::vector<DiscriminativenessReport> run_verify_theorem(
    const TheoremRunConfig& config);

}  // namespace pfgc
