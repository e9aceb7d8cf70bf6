#include "cirl/harness.hpp"

#include "cirl/error.hpp"
#include "cirl/estimate.hpp"
#include "cirl/irl.hpp"
#include "cirl/stats.hpp"
#include "cirl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstring>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cirl {
namespace {

// Tags keep cell keys of different experiments apart.
constexpr std::uint64_t kTagEstimation = 1;
constexpr std::uint64_t kTagSuccess = 2;
constexpr std::uint64_t kTagBootstrap = 3;

// Shortest text that parses back to the same double.
std::string fmt_num(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint64_t bits_of(double v) {
  std::uint64_t u = 0;
  static_assert(sizeof u == sizeof v);
  std::memcpy(&u, &v, sizeof u);
  return u;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  unsigned long long out = 0;
  try {
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" + v + "'");
  }
  if (pos != v.size()) throw std::invalid_argument(key + ": expected a non-negative integer, got '" + v + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(out))
    throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument(key + ": expected a boolean, got '" + v + "'");
}

// "1,2,5-8" style integer lists.
std::vector<std::uint64_t> parse_u64_list(const std::string& key, const std::string& v) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(v, ',')) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_u64(key, item));
      continue;
    }
    const auto lo = parse_u64(key, trim(item.substr(0, dash)));
    const auto hi = parse_u64(key, trim(item.substr(dash + 1)));
    if (hi < lo) throw std::invalid_argument(key + ": empty range '" + item + "'");
    for (auto x = lo; x <= hi; ++x) out.push_back(x);
  }
  if (out.empty()) throw std::invalid_argument(key + ": empty list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& key, const std::string& v) {
  const auto raw = parse_u64_list(key, v);
  return {raw.begin(), raw.end()};
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw std::invalid_argument(key + ": empty list");
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    if constexpr (std::is_floating_point_v<T>) {
      os << fmt_num(xs[i]);
    } else {
      os << xs[i];
    }
  }
  return os.str();
}

struct CellOutcome {
  std::size_t successes = 0;
  std::size_t infeasible = 0;
  std::size_t divergent = 0;
  std::vector<int> outcomes;
};

CellOutcome run_success_cell(const IRLProblem& problem, const std::vector<FMatrix>& reference, const BasisSpec& basis,
                             const ExperimentConfig& cfg, std::uint64_t problem_seed, std::size_t k, std::size_t n) {
  const auto key = cell_key({kTagSuccess, problem_seed, k, n, bits_of(cfg.c), bits_of(cfg.gamma), cfg.num_actions,
                             static_cast<std::uint64_t>(cfg.degree), static_cast<std::uint64_t>(cfg.sample_bits), cfg.ref_k,
                             cfg.grid_size});
  std::vector<int> status(cfg.trials, 0);  // 1 success, 0 wrong, -1 infeasible, -2 divergent
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    Rng rng(trial_seed(cfg.master_seed, key, t));
    IrlParams params;
    params.c = cfg.c;
    params.k = k;
    params.n = n;
    params.sample_bits = cfg.sample_bits;
    try {
      const RewardVector alpha = continuous_irl(problem, basis, params, rng);
      status[t] = classify_reward(alpha.padded(cfg.ref_k), reference, basis, cfg.grid_size).correct() ? 1 : 0;
    } catch (const IrlInfeasible&) {
      status[t] = -1;
    } catch (const DivergenceError&) {
      status[t] = -2;
    }
  });
  CellOutcome out;
  out.outcomes.resize(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    out.outcomes[t] = status[t] == 1;
    out.successes += status[t] == 1;
    out.infeasible += status[t] == -1;
    out.divergent += status[t] == -2;
  }
  return out;
}

std::string success_row(const std::string& experiment, const ExperimentConfig& cfg, const ProblemSummary& problem, std::size_t k,
                        std::size_t n, const CellOutcome& cell) {
  Rng boot(derive_seed(cfg.master_seed, {kTagBootstrap, problem.seed, k, n}));
  const Interval ci = bootstrap_proportion_ci(cell.outcomes, cfg.bootstrap, boot);
  const FailureRate rate = clamped_failure_rate(cfg.trials - cell.successes, cfg.trials);
  const double floor_delta = 1.0 / static_cast<double>(cfg.trials + 1);
  const double log_lo = std::log(1.0 / std::max(1.0 - ci.lo, floor_delta));
  const double log_hi = std::log(1.0 / std::max(1.0 - ci.hi, floor_delta));
  std::ostringstream os;
  os << experiment << ',' << cfg.master_seed << ',' << problem.seed << ',' << cfg.num_actions << ',' << fmt_num(cfg.gamma) << ','
     << cfg.degree << ',' << fmt_num(cfg.c) << ',' << k << ',' << n << ',' << cfg.sample_bits << ',' << cfg.ref_k << ','
     << cfg.grid_size << ',' << cfg.trials << ',' << cfg.bootstrap << ',' << fmt_num(problem.beta_inverse) << ','
     << fmt_num(problem.delta_measured) << ',' << cell.successes << ',' << cell.infeasible << ',' << cell.divergent << ','
     << fmt_num(static_cast<double>(cell.successes) / static_cast<double>(cfg.trials)) << ',' << fmt_num(ci.lo) << ','
     << fmt_num(ci.hi) << ',' << fmt_num(rate.delta_hat) << ',' << (rate.clamped ? 1 : 0) << ','
     << fmt_num(std::log(1.0 / rate.delta_hat)) << ',' << fmt_num(log_lo) << ',' << fmt_num(log_hi);
  return os.str();
}

ProblemSummary summarize(const IRLProblem& problem, const BasisSpec& basis, const ExperimentConfig& cfg) {
  ProblemSummary s;
  s.seed = problem.rng_seed;
  s.delta_measured = measured_delta(problem, basis, cfg.ref_k);
  try {
    s.beta_inverse = 1.0 / estimate_beta(problem, basis, cfg.beta_k, cfg.c);
  } catch (const IrlInfeasible&) {
    s.beta_inverse = std::numeric_limits<double>::infinity();
  }
  return s;
}

}  // namespace

ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "estimation" || name == "estimate") return ExperimentKind::Estimation;
  if (name == "irl_success" || name == "irl") return ExperimentKind::IrlSuccess;
  if (name == "beta_sweep" || name == "beta") return ExperimentKind::BetaSweep;
  throw std::invalid_argument("unknown experiment '" + name + "' (expected estimation, irl_success or beta_sweep)");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Estimation: return "estimation";
    case ExperimentKind::IrlSuccess: return "irl_success";
    case ExperimentKind::BetaSweep: return "beta_sweep";
  }
  return "unknown";
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.experiment = kind;
  switch (kind) {
    case ExperimentKind::Estimation:
      break;
    case ExperimentKind::IrlSuccess:
      cfg.seeds = {9};
      cfg.k_values = {5};
      cfg.n_values = {1000, 3000, 9000, 27000};
      break;
    case ExperimentKind::BetaSweep:
      cfg.seeds = parse_u64_list("seeds", "1-40");
      cfg.k_values = {5};
      cfg.n_values = {500, 2000, 8000};
      break;
  }
  return cfg;
}

void ExperimentConfig::apply_paper_scale() {
  switch (experiment) {
    case ExperimentKind::Estimation:
      k_values = {5, 15, 25};
      n_values = {1000, 4000, 16000, 64000, 256000};
      epsilons = {0.5, 1.0};
      trials = 320;
      break;
    case ExperimentKind::IrlSuccess:
      k_values = {5, 15, 25};
      n_values = {1000, 3000, 9000, 27000, 81000};
      trials = 240;
      break;
    case ExperimentKind::BetaSweep:
      beta_select = 6;
      n_values = {500, 1000, 2000, 4000, 8000, 16000};
      trials = 160;
      break;
  }
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (seeds.empty()) fail("seeds: at least one seed is required");
  if (k_values.empty() || n_values.empty()) fail("k and n grids must be non-empty");
  for (auto k : k_values)
    if (k == 0) fail("k: values must be >= 1");
  for (auto n : n_values)
    if (n == 0) fail("n: values must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma: must lie in (0, 1)");
  if (!(c > 0.0)) fail("c: must be positive");
  if (num_actions < 2) fail("num_actions: must be >= 2");
  if (degree < 2 || degree % 2 != 0) fail("degree: must be an even integer >= 2");
  if (trials == 0) fail("trials: must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) fail("delta: must lie in (0, 1)");
  for (double e : epsilons)
    if (!(e > 0.0)) fail("epsilons: values must be positive");
  if (grid_size < 2) fail("grid_size: must be >= 2");
  if (bootstrap == 0) fail("bootstrap: must be >= 1");
  if (sample_bits < 1 || sample_bits > 60) fail("sample_bits: must lie in [1, 60]");
  if (beta_k == 0) fail("beta_k: must be >= 1");
  if (experiment != ExperimentKind::Estimation) {
    for (auto k : k_values)
      if (k > ref_k) fail("ref_k: must be at least every k in the grid");
  }
}

void set_config_value(ExperimentConfig& cfg, const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in);
  const std::string v = trim(value_in);
  if (key == "experiment") {
    cfg.experiment = parse_experiment_kind(v);
  } else if (key == "master_seed") {
    cfg.master_seed = parse_u64(key, v);
  } else if (key == "seeds") {
    cfg.seeds = parse_u64_list(key, v);
  } else if (key == "k") {
    cfg.k_values = parse_size_list(key, v);
  } else if (key == "n") {
    cfg.n_values = parse_size_list(key, v);
  } else if (key == "gamma") {
    cfg.gamma = parse_double(key, v);
  } else if (key == "c") {
    cfg.c = parse_double(key, v);
  } else if (key == "num_actions") {
    cfg.num_actions = parse_u64(key, v);
  } else if (key == "degree") {
    cfg.degree = static_cast<int>(parse_u64(key, v));
  } else if (key == "trials") {
    cfg.trials = parse_u64(key, v);
  } else if (key == "output") {
    cfg.output = v;
  } else if (key == "delta") {
    cfg.delta = parse_double(key, v);
  } else if (key == "epsilons") {
    cfg.epsilons = parse_double_list(key, v);
  } else if (key == "ref_k") {
    cfg.ref_k = parse_u64(key, v);
  } else if (key == "grid_size") {
    cfg.grid_size = parse_u64(key, v);
  } else if (key == "bootstrap") {
    cfg.bootstrap = parse_u64(key, v);
  } else if (key == "sample_bits") {
    cfg.sample_bits = static_cast<int>(parse_u64(key, v));
  } else if (key == "beta_k") {
    cfg.beta_k = parse_u64(key, v);
  } else if (key == "beta_select") {
    cfg.beta_select = parse_u64(key, v);
  } else if (key == "threads") {
    cfg.threads = parse_u64(key, v);
  } else if (key == "regenerate") {
    cfg.regenerate = parse_bool(key, v);
  } else if (key == "paper_scale") {
    if (parse_bool(key, v)) cfg.apply_paper_scale();
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void parse_config(std::istream& in, ExperimentConfig& cfg) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    try {
      set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void load_config(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  try {
    parse_config(in, cfg);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
  out << "experiment=" << to_string(cfg.experiment) << '\n'
      << "master_seed=" << cfg.master_seed << '\n'
      << "seeds=" << join(cfg.seeds) << '\n'
      << "k=" << join(cfg.k_values) << '\n'
      << "n=" << join(cfg.n_values) << '\n'
      << "gamma=" << fmt_num(cfg.gamma) << '\n'
      << "c=" << fmt_num(cfg.c) << '\n'
      << "num_actions=" << cfg.num_actions << '\n'
      << "degree=" << cfg.degree << '\n'
      << "trials=" << cfg.trials << '\n'
      << "output=" << cfg.output << '\n'
      << "delta=" << fmt_num(cfg.delta) << '\n'
      << "epsilons=" << join(cfg.epsilons) << '\n'
      << "ref_k=" << cfg.ref_k << '\n'
      << "grid_size=" << cfg.grid_size << '\n'
      << "bootstrap=" << cfg.bootstrap << '\n'
      << "sample_bits=" << cfg.sample_bits << '\n'
      << "beta_k=" << cfg.beta_k << '\n'
      << "beta_select=" << cfg.beta_select << '\n'
      << "threads=" << cfg.threads << '\n'
      << "regenerate=" << (cfg.regenerate ? "true" : "false") << '\n';
}

void CsvTable::write(std::ostream& out) const {
  out << header << '\n';
  for (const auto& r : rows) out << r << '\n';
}

void CsvTable::save(const std::string& path) const {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t cell_key(std::initializer_list<std::uint64_t> params) { return derive_seed(0, params); }

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t key, std::size_t trial) { return derive_seed(master, {key, trial}); }

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string estimation_csv_header() {
  return "experiment,master_seed,problem_seed,regenerate,degree,k,n,sample_bits,trials,delta,mean_error,std_error,two_std,"
         "max_error,theory_eps,target_eps";
}

std::string irl_success_csv_header() {
  return "experiment,master_seed,problem_seed,num_actions,gamma,degree,c,k,n,sample_bits,ref_k,grid_size,trials,bootstrap,"
         "beta_inverse,delta_measured,successes,infeasible,divergent,success_rate,ci_lo,ci_hi,delta_hat,delta_clamped,"
         "log_inv_delta,log_ci_lo,log_ci_hi";
}

std::string beta_csv_header() { return irl_success_csv_header(); }

CsvTable run_estimation_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const BasisSpec basis;
  CsvTable table{estimation_csv_header(), {}};
  for (std::size_t k : cfg.k_values) {
    // Grid points plus the sample counts that guarantee each target epsilon.
    std::vector<std::pair<std::size_t, double>> grid;
    for (std::size_t n : cfg.n_values) grid.emplace_back(n, std::numeric_limits<double>::quiet_NaN());
    for (double eps : cfg.epsilons) grid.emplace_back(static_cast<std::size_t>(required_samples(k, eps, cfg.delta)), eps);
    for (const auto& [n, target] : grid) {
      for (std::uint64_t seed : cfg.seeds) {
        Rng gen(seed);
        const PolyTransition t = gen_transition(cfg.degree, gen);
        const CoeffMatrix exact = exact_Z(t, basis, k);
        const auto key = cell_key({kTagEstimation, seed, k, n, static_cast<std::uint64_t>(cfg.degree),
                                   static_cast<std::uint64_t>(cfg.sample_bits), cfg.regenerate ? 1u : 0u});
        std::vector<double> errors(cfg.trials);
        parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
          Rng rng(trial_seed(cfg.master_seed, key, trial));
          if (cfg.regenerate) {
            const PolyTransition own = gen_transition(cfg.degree, rng);
            errors[trial] = inf_norm(estimate_Z(own, n, k, basis, rng, 0, cfg.sample_bits).entries - exact_Z(own, basis, k).entries);
          } else {
            errors[trial] = inf_norm(estimate_Z(t, n, k, basis, rng, 0, cfg.sample_bits).entries - exact.entries);
          }
        });
        const double m = mean(errors);
        const double sd = stddev(errors);
        const double theory = std::sqrt(8.0 * static_cast<double>(k * k) *
                                        std::log(2.0 * static_cast<double>(k * k) / cfg.delta) / static_cast<double>(n));
        std::ostringstream os;
        os << "estimation," << cfg.master_seed << ',' << seed << ',' << (cfg.regenerate ? 1 : 0) << ',' << cfg.degree << ',' << k << ',' << n << ','
           << cfg.sample_bits << ',' << cfg.trials << ',' << fmt_num(cfg.delta) << ',' << fmt_num(m) << ',' << fmt_num(sd) << ','
           << fmt_num(2.0 * sd) << ',' << fmt_num(*std::max_element(errors.begin(), errors.end())) << ',' << fmt_num(theory) << ',';
        if (!std::isnan(target)) os << fmt_num(target);
        table.rows.push_back(os.str());
      }
    }
  }
  return table;
}

CsvTable run_irl_success_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const BasisSpec basis;
  const IRLProblem problem = gen_problem(cfg.num_actions, cfg.gamma, cfg.degree, cfg.seeds.front());
  const std::vector<FMatrix> reference = exact_F_all(problem, basis, cfg.ref_k);
  const ProblemSummary summary = summarize(problem, basis, cfg);
  CsvTable table{irl_success_csv_header(), {}};
  for (std::size_t k : cfg.k_values) {
    for (std::size_t n : cfg.n_values) {
      const CellOutcome cell = run_success_cell(problem, reference, basis, cfg, summary.seed, k, n);
      table.rows.push_back(success_row("irl_success", cfg, summary, k, n, cell));
    }
  }
  return table;
}

std::vector<ProblemSummary> select_beta_problems(const ExperimentConfig& cfg, const BasisSpec& basis) {
  std::vector<ProblemSummary> usable;
  for (std::uint64_t seed : cfg.seeds) {
    const IRLProblem problem = gen_problem(cfg.num_actions, cfg.gamma, cfg.degree, seed);
    try {
      const auto reference = exact_F_all(problem, basis, cfg.ref_k);
      const ProblemSummary s = summarize(problem, basis, cfg);
      if (!std::isfinite(s.beta_inverse)) continue;
      // The exact-matrix solution at every k must already pass, so that
      // failures measure sampling error rather than truncation.
      bool ok = true;
      for (std::size_t k : cfg.k_values) {
        IrlParams params;
        params.c = cfg.c;
        params.k = k;
        Rng unused(0);
        const RewardVector alpha = continuous_irl(problem, basis, params, unused);
        ok = ok && classify_reward(alpha.padded(cfg.ref_k), reference, basis, cfg.grid_size).correct();
      }
      if (ok) usable.push_back(s);
    } catch (const IrlInfeasible&) {
    } catch (const DivergenceError&) {
    }
  }
  std::sort(usable.begin(), usable.end(), [](const auto& a, const auto& b) { return a.beta_inverse < b.beta_inverse; });
  if (cfg.beta_select == 0 || usable.size() <= cfg.beta_select) return usable;
  std::vector<ProblemSummary> chosen;
  std::vector<bool> taken(usable.size(), false);
  const double lo = std::log(usable.front().beta_inverse);
  const double hi = std::log(usable.back().beta_inverse);
  for (std::size_t i = 0; i < cfg.beta_select; ++i) {
    const double target = cfg.beta_select == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cfg.beta_select - 1);
    std::size_t best = usable.size();
    for (std::size_t j = 0; j < usable.size(); ++j) {
      if (taken[j]) continue;
      if (best == usable.size() ||
          std::abs(std::log(usable[j].beta_inverse) - target) < std::abs(std::log(usable[best].beta_inverse) - target))
        best = j;
    }
    taken[best] = true;
    chosen.push_back(usable[best]);
  }
  std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) { return a.beta_inverse < b.beta_inverse; });
  return chosen;
}

CsvTable run_beta_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const BasisSpec basis;
  const auto problems = select_beta_problems(cfg, basis);
  if (problems.empty()) throw IrlInfeasible("beta sweep: no candidate problem is usable");
  CsvTable table{beta_csv_header(), {}};
  for (const auto& summary : problems) {
    const IRLProblem problem = gen_problem(cfg.num_actions, cfg.gamma, cfg.degree, summary.seed);
    const auto reference = exact_F_all(problem, basis, cfg.ref_k);
    for (std::size_t k : cfg.k_values) {
      for (std::size_t n : cfg.n_values) {
        const CellOutcome cell = run_success_cell(problem, reference, basis, cfg, summary.seed, k, n);
        table.rows.push_back(success_row("beta_sweep", cfg, summary, k, n, cell));
      }
    }
  }
  return table;
}

CsvTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::Estimation: return run_estimation_experiment(cfg);
    case ExperimentKind::IrlSuccess: return run_irl_success_experiment(cfg);
    case ExperimentKind::BetaSweep: return run_beta_experiment(cfg);
  }
  throw std::logic_error("unhandled experiment kind");
}

}  // namespace cirl
