#include "cirl/verify.hpp"

#include "cirl/error.hpp"
#include "cirl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace cirl {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double grid_point(std::size_t i, std::size_t size) {
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(size - 1);
}

}  // namespace

std::string VerificationReport::csv_header() { return "min_margin,verdict,grid_size,k,num_actions,per_action_margins"; }

std::string VerificationReport::csv_row(std::size_t k) const {
  std::ostringstream os;
  os << fmt17(min_margin) << ',' << (correct() ? "correct" : "incorrect") << ',' << grid_size << ',' << k << ','
     << per_action_margins.size() + 1 << ',';
  for (Eigen::Index a = 0; a < per_action_margins.size(); ++a) {
    if (a > 0) os << ';';
    os << fmt17(per_action_margins[a]);
  }
  return os.str();
}

VerificationReport classify_reward(const RewardVector& alpha, const std::vector<FMatrix>& F_list, const BasisSpec& basis,
                                   std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("classify_reward: grid_size must be >= 2");
  if (F_list.empty()) throw DomainError("classify_reward: no non-optimal actions");
  for (const auto& f : F_list) {
    if (f.k() != alpha.k()) throw DomainError("classify_reward: reward length differs from F size");
  }
  const auto k = static_cast<Eigen::Index>(alpha.k());
  Eigen::MatrixXd phi(k, static_cast<Eigen::Index>(grid_size));
  for (std::size_t i = 0; i < grid_size; ++i) eval_phi_into(basis, grid_point(i, grid_size), phi.col(static_cast<Eigen::Index>(i)));

  VerificationReport report;
  report.grid_size = grid_size;
  report.per_action_margins.resize(static_cast<Eigen::Index>(F_list.size()));
  for (std::size_t a = 0; a < F_list.size(); ++a) {
    const Eigen::RowVectorXd margins = alpha.alpha().transpose() * F_list[a].entries * phi;
    report.per_action_margins[static_cast<Eigen::Index>(a)] = margins.minCoeff();
  }
  report.min_margin = report.per_action_margins.minCoeff();
  report.verdict = report.min_margin > 0.0 ? Verdict::Correct : Verdict::Incorrect;
  return report;
}

ReturnEstimate empirical_returns(const IRLProblem& problem, const RewardVector& alpha, const BasisSpec& basis, double s0,
                                 std::size_t horizon, std::size_t rollouts, Rng& rng, int sample_bits) {
  if (horizon == 0 || rollouts == 0) throw DomainError("empirical_returns: horizon and rollouts must be >= 1");
  if (!(s0 >= -1.0 && s0 <= 1.0)) throw DomainError("empirical_returns: start state outside [-1, 1]");
  const std::size_t num_actions = problem.num_actions();
  const double gamma = problem.gamma;
  ReturnEstimate est;
  est.mean.resize(static_cast<Eigen::Index>(num_actions));
  est.std_error.resize(static_cast<Eigen::Index>(num_actions));
  for (std::size_t a = 0; a < num_actions; ++a) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t r = 0; r < rollouts; ++r) {
      double s = sample_next(problem.transitions[a], s0, rng, sample_bits);
      double discount = gamma;
      double total = discount * alpha(basis, s);
      for (std::size_t step = 2; step <= horizon; ++step) {
        s = sample_next(problem.transitions.front(), s, rng, sample_bits);
        discount *= gamma;
        total += discount * alpha(basis, s);
      }
      sum += total;
      sum_sq += total * total;
    }
    const double n = static_cast<double>(rollouts);
    const double mean = sum / n;
    const double var = rollouts > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    est.mean[static_cast<Eigen::Index>(a)] = mean;
    est.std_error[static_cast<Eigen::Index>(a)] = std::sqrt(var / n);
  }
  return est;
}

bool optimal_action_leads(const ReturnEstimate& est, double z, double* worst_z) {
  double worst = std::numeric_limits<double>::infinity();
  bool leads = true;
  for (Eigen::Index a = 1; a < est.mean.size(); ++a) {
    const double diff = est.mean[0] - est.mean[a];
    const double pooled = std::hypot(est.std_error[0], est.std_error[a]);
    const double score = pooled > 0.0 ? diff / pooled : (diff > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity());
    worst = std::min(worst, score);
    if (!(diff > 0.0 && diff >= z * pooled)) leads = false;
  }
  if (worst_z) *worst_z = worst;
  return leads;
}

RankingSummary rollout_ranking(const IRLProblem& problem, const RewardVector& alpha, const BasisSpec& basis,
                               std::size_t num_states, std::size_t horizon, std::size_t rollouts, double z, const Rng& rng) {
  if (num_states < 2) throw DomainError("rollout_ranking: need at least two start states");
  RankingSummary summary;
  summary.num_states = num_states;
  summary.worst_z = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < num_states; ++i) {
    Rng stream = rng.child({i});
    const ReturnEstimate est = empirical_returns(problem, alpha, basis, grid_point(i, num_states), horizon, rollouts, stream);
    double worst = 0.0;
    if (optimal_action_leads(est, z, &worst)) ++summary.num_optimal_first;
    summary.worst_z = std::min(summary.worst_z, worst);
  }
  return summary;
}

Eigen::MatrixXd multistep_coeffs(const std::vector<CoeffMatrix>& Z_seq) {
  if (Z_seq.empty()) throw DomainError("multistep_coeffs: empty sequence");
  Eigen::MatrixXd m = Z_seq.front().entries;
  for (std::size_t r = 1; r < Z_seq.size(); ++r) {
    if (Z_seq[r].entries.rows() != m.rows() || Z_seq[r].entries.cols() != m.cols())
      throw DomainError("multistep_coeffs: matrices differ in size");
    m = Z_seq[r].entries * m;
  }
  return m;
}

CoeffMatrix quadrature_Z(const PolyTransition& t, const BasisSpec& basis, std::size_t k, std::size_t num_nodes) {
  if (k == 0) throw DomainError("quadrature_Z: k must be >= 1");
  if (num_nodes == 0) num_nodes = k > 25 ? 128 : 64;
  const GaussLegendre rule(num_nodes);
  const auto q = static_cast<Eigen::Index>(num_nodes);
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd phi(kk, q);
  Eigen::MatrixXd pdf(q, q);  // pdf(i, j) = P(x_i | x_j) w_i w_j
  for (Eigen::Index i = 0; i < q; ++i) eval_phi_into(basis, rule.nodes()[static_cast<std::size_t>(i)], phi.col(i));
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = 0; j < q; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      pdf(i, j) = transition_pdf(t, rule.nodes()[ui], rule.nodes()[uj]) * rule.weights()[ui] * rule.weights()[uj];
    }
  }
  CoeffMatrix z;
  z.entries = phi * pdf * phi.transpose();
  z.provenance = Provenance::Exact;
  return z;
}

}  // namespace cirl
