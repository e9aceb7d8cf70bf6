#pragma once

#include "cirl/basis.hpp"
#include "cirl/polymdp.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cirl {

enum class ExperimentKind { Estimation, IrlSuccess, BetaSweep };

ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

/// Settings for one experiment run. Defaults are the desk-scale protocol;
/// apply_paper_scale() switches to the full grids.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Estimation;
  std::uint64_t master_seed = 20240611;
  /// Problem seeds. Estimation: one transition per seed. IRL success: the
  /// first seed is the fixed problem. Beta sweep: candidate problems.
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<std::size_t> k_values{3, 5, 9};
  std::vector<std::size_t> n_values{250, 1000, 4000, 16000};
  double gamma = 0.7;
  double c = 0.05;
  std::size_t num_actions = 3;
  int degree = 4;
  std::size_t trials = 64;
  std::string output;  ///< empty writes to stdout

  double delta = 0.1;            ///< confidence level for the theoretical sample curve
  std::vector<double> epsilons{0.5, 1.0};
  std::size_t ref_k = 25;        ///< reference truncation for judging recovered rewards
  std::size_t grid_size = 100;
  std::size_t bootstrap = 240;
  int sample_bits = 32;
  std::size_t beta_k = 11;
  std::size_t beta_select = 4;   ///< beta sweep keeps this many candidates (0 keeps all)
  std::size_t threads = 0;       ///< 0 uses the hardware concurrency
  /// Estimation only: draw a fresh transition per trial instead of one per seed.
  bool regenerate = false;

  void validate() const;
  void apply_paper_scale();
  /// Desk defaults for the chosen experiment.
  static ExperimentConfig defaults(ExperimentKind kind);
};

/// Applies one key=value setting. Throws std::invalid_argument on unknown
/// keys or unparsable values.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Flat key=value file; '#' starts a comment, blank lines are skipped.
void parse_config(std::istream& in, ExperimentConfig& cfg);
void load_config(const std::string& path, ExperimentConfig& cfg);
void write_config(std::ostream& out, const ExperimentConfig& cfg);

/// Header and rows of one experiment's CSV output.
struct CsvTable {
  std::string header;
  std::vector<std::string> rows;

  void write(std::ostream& out) const;
  /// Writes to path, or stdout when path is empty. Errors name the path.
  void save(const std::string& path) const;
};

std::string estimation_csv_header();
std::string irl_success_csv_header();
std::string beta_csv_header();

CsvTable run_estimation_experiment(const ExperimentConfig& cfg);
CsvTable run_irl_success_experiment(const ExperimentConfig& cfg);
CsvTable run_beta_experiment(const ExperimentConfig& cfg);
CsvTable run_experiment(const ExperimentConfig& cfg);

/// Measured problem properties used by the sweeps.
struct ProblemSummary {
  std::uint64_t seed = 0;
  double beta_inverse = 0.0;
  double delta_measured = 0.0;
};

/// beta_select candidates with beta^-1 spread evenly on a log scale.
/// Candidates that diverge or are infeasible are skipped.
std::vector<ProblemSummary> select_beta_problems(const ExperimentConfig& cfg, const BasisSpec& basis);

/// Seed of trial t in the cell identified by its parameter tuple. Depends only
/// on values that appear in the CSV row, so a cell can be re-run alone.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t cell_key, std::size_t trial);
std::uint64_t cell_key(std::initializer_list<std::uint64_t> params);

/// Runs body(t) for t in [0, count) on a pool of worker threads.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace cirl
