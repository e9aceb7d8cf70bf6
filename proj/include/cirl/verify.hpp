#pragma once

#include "cirl/basis.hpp"
#include "cirl/coeff_matrix.hpp"
#include "cirl/irl.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/reward.hpp"
#include "cirl/rng.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace cirl {

enum class Verdict { Correct, Incorrect };

/// Bellman-margin check of a reward. verdict is Correct iff min_margin > 0.
struct VerificationReport {
  double min_margin = 0.0;
  Verdict verdict = Verdict::Incorrect;
  std::size_t grid_size = 0;
  Eigen::VectorXd per_action_margins;  ///< min margin for each non-optimal action

  bool correct() const { return verdict == Verdict::Correct; }

  static std::string csv_header();
  /// min_margin,verdict,grid_size,k,num_actions,per_action_margins (';'-joined)
  std::string csv_row(std::size_t k) const;
};

/// Evaluates alpha^T F^(a) phi(s) on grid_size evenly spaced points of [-1, 1]
/// (endpoints included). alpha and every F must share k.
VerificationReport classify_reward(const RewardVector& alpha, const std::vector<FMatrix>& F_list, const BasisSpec& basis,
                                   std::size_t grid_size = 100);

/// Per first-action Monte Carlo estimate of sum_{r=1}^{horizon} gamma^r R(s_r),
/// s_1 ~ P_a(.|s0) and later steps under the optimal action.
struct ReturnEstimate {
  Eigen::VectorXd mean;
  Eigen::VectorXd std_error;
};

ReturnEstimate empirical_returns(const IRLProblem& problem, const RewardVector& alpha, const BasisSpec& basis, double s0,
                                 std::size_t horizon, std::size_t rollouts, Rng& rng, int sample_bits = 32);

/// Count of start states at which action 0 beats every other action by at
/// least z pooled standard errors.
struct RankingSummary {
  std::size_t num_states = 0;
  std::size_t num_optimal_first = 0;
  double worst_z = 0.0;  ///< smallest (mean_0 - mean_a) / pooled SE seen
};

/// True when returns rank action 0 highest by at least z pooled standard errors.
bool optimal_action_leads(const ReturnEstimate& est, double z, double* worst_z = nullptr);

/// Start states are an evenly spaced grid of num_states points in [-1, 1],
/// each evaluated with its own child stream of rng.
RankingSummary rollout_ranking(const IRLProblem& problem, const RewardVector& alpha, const BasisSpec& basis,
                               std::size_t num_states, std::size_t horizon, std::size_t rollouts, double z, const Rng& rng);

/// Ordered product Z_seq[r-1] ... Z_seq[0]; phi(s_r)^T M phi(s_0) approximates
/// the r-step density.
Eigen::MatrixXd multistep_coeffs(const std::vector<CoeffMatrix>& Z_seq);

/// Tensor Gauss-Legendre quadrature of P(s'|s) phi_i(s') phi_j(s).
/// num_nodes = 0 picks 64 nodes, or 128 when k > 25.
CoeffMatrix quadrature_Z(const PolyTransition& t, const BasisSpec& basis, std::size_t k, std::size_t num_nodes = 0);

}  // namespace cirl
