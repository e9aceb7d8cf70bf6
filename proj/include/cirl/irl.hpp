#pragma once

#include "cirl/basis.hpp"
#include "cirl/coeff_matrix.hpp"
#include "cirl/lp.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/reward.hpp"
#include "cirl/rng.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace cirl {

/// k x k Bellman-difference operator F^(a) = sum_r gamma^r T^r (T - Z^(a)),
/// T the optimal action's coefficient matrix.
struct FMatrix {
  Eigen::MatrixXd entries;
  int action_id = 0;
  double gamma = 0.0;

  std::size_t k() const { return static_cast<std::size_t>(entries.rows()); }
};

enum class FMethod {
  /// (I - gamma T) X = T - Z, partial-pivot LU.
  LinearSolve,
  /// Partial sums until gamma^r ||T||^r ||T - Z|| < 1e-12.
  Series,
};

/// Throws DomainError on size mismatch and DivergenceError when ||gamma T||_inf >= 1.
FMatrix compute_F(const CoeffMatrix& T, const CoeffMatrix& Za, double gamma, FMethod method = FMethod::LinearSolve);

/// Evenly spread grid with covering radius at most c.
struct CoveringSet {
  double c = 0.0;
  std::vector<double> points;

  /// max over s in [-1, 1] of the distance to the nearest point.
  double covering_radius() const;
};

/// ceil(2/c) midpoints -1 + (2i - 1)/N. Values of c above 2 are clamped to 2.
CoveringSet covering_set(double c);

/// Rows are grouped by action (in F_list order), then by covering point.
LPStandardForm build_lp(const std::vector<FMatrix>& F_list, const CoveringSet& cover, const BasisSpec& basis);

/// alpha = u* - v* from the certified optimum.
RewardVector solve_lp(const LPStandardForm& lp);

struct IrlParams {
  double c = 0.05;
  std::size_t k = 5;
  /// Samples per action; empty means use the exact coefficient matrices.
  std::optional<std::size_t> n;
  int sample_bits = 32;
};

struct IrlResult {
  RewardVector alpha;
  std::vector<CoeffMatrix> z;  ///< one per action
  std::vector<FMatrix> f;      ///< one per non-optimal action
  CoveringSet cover;
  LpSolution lp;
};

/// Coefficient matrices -> F per non-optimal action -> covering set -> LP.
IrlResult solve_irl(const IRLProblem& problem, const BasisSpec& basis, const IrlParams& params, Rng& rng);

/// Reward coefficients only. Propagates IrlInfeasible and DivergenceError.
RewardVector continuous_irl(const IRLProblem& problem, const BasisSpec& basis, const IrlParams& params, Rng& rng);

/// Exact [kZ] for every action.
std::vector<CoeffMatrix> exact_Z_all(const IRLProblem& problem, const BasisSpec& basis, std::size_t k);

/// F per non-optimal action from per-action coefficient matrices (index 0 is T).
std::vector<FMatrix> compute_F_all(const std::vector<CoeffMatrix>& z, double gamma, FMethod method = FMethod::LinearSolve);

/// F from exact matrices.
std::vector<FMatrix> exact_F_all(const IRLProblem& problem, const BasisSpec& basis, std::size_t k);

/// max_a ||[kZ]^(a)||_inf over exact matrices.
double measured_delta(const IRLProblem& problem, const BasisSpec& basis, std::size_t k);

enum class BetaNorm { L1, Linf };

/// Separability estimate 1 / ||alpha||, alpha from the exact-matrix LP.
double estimate_beta(const IRLProblem& problem, const BasisSpec& basis, std::size_t k = 11, double c = 0.05,
                     BetaNorm norm = BetaNorm::L1);

}  // namespace cirl
