// cirl: command line driver for the experiment harness and one-shot solves.
#include "cirl/error.hpp"
#include "cirl/harness.hpp"
#include "cirl/irl.hpp"
#include "cirl/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

// Keys accepted both in config files and as --key flags.
const std::vector<std::pair<std::string, std::string>> kConfigFlags = {
    {"master_seed", "Master seed for trial streams"},
    {"seeds", "Problem seeds, e.g. 1,2,5-8"},
    {"k", "Truncation values"},
    {"n", "Sample counts per action"},
    {"gamma", "Discount factor"},
    {"c", "Covering radius"},
    {"num_actions", "Number of actions"},
    {"degree", "Transition density degree"},
    {"trials", "Trials per cell"},
    {"output", "Output CSV path ('-' for stdout)"},
    {"delta", "Confidence level for the theoretical curve"},
    {"epsilons", "Target accuracies added to the n grid"},
    {"ref_k", "Reference truncation for judging rewards"},
    {"grid_size", "Classification grid size"},
    {"bootstrap", "Bootstrap resamples"},
    {"sample_bits", "Bits of precision in inverse-transform sampling"},
    {"beta_k", "Truncation used to measure beta"},
    {"beta_select", "Problems kept by the beta sweep (0 keeps all)"},
    {"threads", "Worker threads (0 = hardware concurrency)"},
    {"regenerate", "Estimation: fresh transition per trial (true/false)"},
};

struct ExperimentArgs {
  std::string config_path;
  bool paper_scale = false;
  bool print_config = false;
  std::vector<std::pair<std::string, std::string>> values;
};

void add_experiment(CLI::App& app, CLI::App*& sub, const std::string& name, const std::string& help, ExperimentArgs& args) {
  sub = app.add_subcommand(name, help);
  sub->add_option("--config", args.config_path, "key=value config file")->check(CLI::ExistingFile);
  sub->add_flag("--paper-scale", args.paper_scale, "Use the full-size grids and trial counts");
  sub->add_flag("--print-config", args.print_config, "Print the resolved config and exit");
  args.values.reserve(kConfigFlags.size());
  for (const auto& [key, desc] : kConfigFlags) {
    args.values.emplace_back(key, std::string{});
    std::string flag = "--" + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    sub->add_option(flag, args.values.back().second, desc);
  }
}

int run_experiment_command(cirl::ExperimentKind kind, const ExperimentArgs& args) {
  cirl::ExperimentConfig cfg = cirl::ExperimentConfig::defaults(kind);
  if (args.paper_scale) cfg.apply_paper_scale();
  if (!args.config_path.empty()) cirl::load_config(args.config_path, cfg);
  cfg.experiment = kind;
  for (const auto& [key, value] : args.values)
    if (!value.empty()) cirl::set_config_value(cfg, key, value);
  cfg.validate();
  if (args.print_config) {
    cirl::write_config(std::cout, cfg);
    return kExitOk;
  }
  cirl::run_experiment(cfg).save(cfg.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-state inverse reinforcement learning"};
  app.require_subcommand(1);

  ExperimentArgs est_args, irl_args, beta_args;
  CLI::App* est_cmd = nullptr;
  CLI::App* irl_cmd = nullptr;
  CLI::App* beta_cmd = nullptr;
  add_experiment(app, est_cmd, "estimate", "Coefficient-matrix estimation error versus n", est_args);
  add_experiment(app, irl_cmd, "irl", "Sampled IRL success rate versus n on one problem", irl_args);
  add_experiment(app, beta_cmd, "beta", "Sampled IRL success across problems of varying separability", beta_args);

  auto* solve_cmd = app.add_subcommand("solve", "Recover a reward for a serialized problem");
  std::string problem_path, reward_path, report_path;
  std::size_t solve_k = 5;
  double solve_c = 0.05;
  std::optional<std::size_t> solve_n;
  std::uint64_t solve_seed = 0;
  std::size_t solve_grid = 100;
  int solve_bits = 32;
  solve_cmd->add_option("problem", problem_path, "Problem file written by 'gen'")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("-k,--k", solve_k, "Truncation parameter")->check(CLI::PositiveNumber);
  solve_cmd->add_option("-c,--c", solve_c, "Covering radius")->check(CLI::PositiveNumber);
  solve_cmd->add_option("-n,--n", solve_n, "Samples per action (omit for exact matrices)")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve_seed, "Sampling seed");
  solve_cmd->add_option("--grid-size", solve_grid, "Classification grid size");
  solve_cmd->add_option("--sample-bits", solve_bits, "Bits of precision in inverse-transform sampling");
  solve_cmd->add_option("-o,--output", reward_path, "Reward output path (default stdout)");
  solve_cmd->add_option("--report", report_path, "Verification report CSV path (default stderr)");

  auto* gen_cmd = app.add_subcommand("gen", "Write a random problem file");
  std::size_t gen_actions = 3;
  double gen_gamma = 0.7;
  int gen_degree = 4;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen_cmd->add_option("--num-actions", gen_actions, "Number of actions")->check(CLI::Range(1, 1 << 20));
  gen_cmd->add_option("--gamma", gen_gamma, "Discount factor");
  gen_cmd->add_option("--degree", gen_degree, "Transition density degree (even)");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("-o,--output", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*est_cmd) return run_experiment_command(cirl::ExperimentKind::Estimation, est_args);
    if (*irl_cmd) return run_experiment_command(cirl::ExperimentKind::IrlSuccess, irl_args);
    if (*beta_cmd) return run_experiment_command(cirl::ExperimentKind::BetaSweep, beta_args);
    if (*gen_cmd) {
      const cirl::IRLProblem p = cirl::gen_problem(gen_actions, gen_gamma, gen_degree, gen_seed);
      if (gen_out.empty()) {
        cirl::write_problem(std::cout, p);
      } else {
        cirl::save_problem(gen_out, p);
      }
      return kExitOk;
    }
    if (*solve_cmd) {
      const cirl::IRLProblem p = cirl::load_problem(problem_path);
      const cirl::BasisSpec basis;
      cirl::IrlParams params;
      params.k = solve_k;
      params.c = solve_c;
      params.n = solve_n;
      params.sample_bits = solve_bits;
      cirl::Rng rng(solve_seed);
      const cirl::IrlResult result = cirl::solve_irl(p, basis, params, rng);
      if (reward_path.empty()) {
        cirl::write_reward(std::cout, result.alpha);
      } else {
        cirl::save_reward(reward_path, result.alpha);
      }
      // Judged against the exact matrices of the same truncation.
      const auto report = cirl::classify_reward(result.alpha, cirl::exact_F_all(p, basis, solve_k), basis, solve_grid);
      const std::string csv = cirl::VerificationReport::csv_header() + '\n' + report.csv_row(solve_k) + '\n';
      if (report_path.empty()) {
        std::cerr << csv;
      } else {
        cirl::CsvTable{cirl::VerificationReport::csv_header(), {report.csv_row(solve_k)}}.save(report_path);
      }
      return kExitOk;
    }
  } catch (const cirl::IrlInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
