#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace cirl {

/// min c^T x  s.t.  A x >= b,  x >= 0.
///
/// For the reward program, x = [u; v] with alpha = u - v, c and b are all
/// ones, and each row is [g^T, -g^T] for g = F^(a) phi(s_bar).
struct LPStandardForm {
  std::size_t num_vars = 0;
  Eigen::VectorXd objective;
  Eigen::MatrixXd constraint_matrix;
  Eigen::VectorXd rhs;
  /// Non-optimal action index and covering-point index of each row.
  Eigen::VectorXi row_action;
  Eigen::VectorXi row_point;

  std::size_t num_rows() const { return static_cast<std::size_t>(constraint_matrix.rows()); }
};

struct LpSolution {
  Eigen::VectorXd x;     ///< primal optimum
  Eigen::VectorXd dual;  ///< multipliers of the >= rows
  double objective = 0.0;
  double primal_residual = 0.0;  ///< max violation of A x >= b and x >= 0
  double dual_residual = 0.0;    ///< max violation of A^T y <= c and y >= 0
  double gap = 0.0;              ///< |c^T x - b^T y|
  double slackness = 0.0;        ///< max complementary-slackness product
  std::size_t pivots = 0;
};

/// Dense tableau simplex with Bland's rule, run on the dual
///   max b^T y  s.t.  A^T y <= c,  y >= 0,
/// which starts feasible at y = 0 whenever c >= 0. The optimal basis is then
/// re-solved by LU and certified against the primal. Throws IrlInfeasible when
/// the dual is unbounded (primal infeasible) and std::runtime_error when the
/// certificate residuals exceed `tolerance`.
LpSolution solve_lp_certified(const LPStandardForm& lp, double tolerance = 1e-8);

}  // namespace cirl
