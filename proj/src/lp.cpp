#include "cirl/lp.hpp"

#include "cirl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cirl {
namespace {

constexpr double kReducedCostTol = 1e-11;
constexpr double kPivotTol = 1e-11;

struct Tableau {
  Eigen::MatrixXd body;  // n x (m + n), columns [A^T | I]
  Eigen::VectorXd rhs;   // n
  Eigen::VectorXd cost;  // reduced costs, length m + n
  std::vector<Eigen::Index> basis;

  void pivot(Eigen::Index row, Eigen::Index col) {
    const double p = body(row, col);
    body.row(row) /= p;
    rhs[row] /= p;
    for (Eigen::Index i = 0; i < body.rows(); ++i) {
      if (i == row) continue;
      const double f = body(i, col);
      if (f == 0.0) continue;
      body.row(i) -= f * body.row(row);
      rhs[i] -= f * rhs[row];
    }
    const double f = cost[col];
    if (f != 0.0) cost -= f * body.row(row).transpose();
    basis[static_cast<std::size_t>(row)] = col;
  }
};

}  // namespace

LpSolution solve_lp_certified(const LPStandardForm& lp, double tolerance) {
  const Eigen::MatrixXd& A = lp.constraint_matrix;
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (m == 0 || n == 0) throw DomainError("linear program has no rows or no columns");
  if (lp.objective.size() != n || lp.rhs.size() != m) throw DomainError("linear program dimensions are inconsistent");
  if ((lp.objective.array() < 0.0).any()) throw DomainError("simplex start needs a nonnegative objective");
  if (!A.allFinite() || !lp.rhs.allFinite()) throw DomainError("linear program has non-finite coefficients");

  Tableau t;
  t.body.resize(n, m + n);
  t.body.leftCols(m) = A.transpose();
  t.body.rightCols(n).setIdentity();
  t.rhs = lp.objective;
  t.cost = Eigen::VectorXd::Zero(m + n);
  t.cost.head(m) = lp.rhs;
  t.basis.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) t.basis[static_cast<std::size_t>(j)] = m + j;

  const std::size_t max_pivots = 50000 + 100 * static_cast<std::size_t>(m + n);
  std::size_t pivots = 0;
  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < m + n; ++j) {
      if (t.cost[j] > kReducedCostTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double a = t.body(i, enter);
      if (a > kPivotTol) best = std::min(best, std::max(0.0, t.rhs[i]) / a);
    }
    // Bland: among minimum-ratio rows, the one whose basic variable has the lowest index.
    Eigen::Index leave = -1;
    const double cutoff = best + 1e-12 * std::max(1.0, best);
    for (Eigen::Index i = 0; i < n && std::isfinite(best); ++i) {
      const double a = t.body(i, enter);
      if (a <= kPivotTol || std::max(0.0, t.rhs[i]) / a > cutoff) continue;
      if (leave < 0 || t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)]) leave = i;
    }
    if (leave < 0) throw IrlInfeasible("reward LP is infeasible: no alpha satisfies every margin constraint");
    t.pivot(leave, enter);
    if (++pivots > max_pivots) throw std::runtime_error("simplex exceeded the pivot limit");
  }

  // Re-solve the final basis directly for accuracy.
  Eigen::MatrixXd B(n, n);
  Eigen::VectorXd cb(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index col = t.basis[static_cast<std::size_t>(r)];
    if (col < m) {
      B.col(r) = A.row(col).transpose();
      cb[r] = lp.rhs[col];
    } else {
      B.col(r) = Eigen::VectorXd::Unit(n, col - m);
      cb[r] = 0.0;
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
  const Eigen::VectorXd z = lu.solve(lp.objective);
  Eigen::VectorXd x = lu.transpose().solve(cb);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index col = t.basis[static_cast<std::size_t>(r)];
    if (col < m) y[col] = z[r];
  }
  if (!x.allFinite() || !y.allFinite()) {
    // Singular basis matrix; fall back to the tableau values.
    x = -t.cost.tail(n);
    y.setZero();
    for (Eigen::Index r = 0; r < n; ++r) {
      const Eigen::Index col = t.basis[static_cast<std::size_t>(r)];
      if (col < m) y[col] = t.rhs[r];
    }
  }
  x = x.cwiseMax(0.0);
  y = y.cwiseMax(0.0);

  LpSolution sol;
  sol.pivots = pivots;
  const Eigen::VectorXd row_slack = A * x - lp.rhs;
  const Eigen::VectorXd col_slack = lp.objective - A.transpose() * y;
  sol.primal_residual = std::max(0.0, -row_slack.minCoeff());
  sol.dual_residual = std::max(0.0, -col_slack.minCoeff());
  const double primal_obj = lp.objective.dot(x);
  const double dual_obj = lp.rhs.dot(y);
  sol.objective = primal_obj;
  sol.gap = std::abs(primal_obj - dual_obj);
  sol.slackness = std::max(y.cwiseProduct(row_slack).cwiseAbs().maxCoeff(), x.cwiseProduct(col_slack).cwiseAbs().maxCoeff());
  sol.x = std::move(x);
  sol.dual = std::move(y);

  const double scale = std::max(1.0, std::abs(primal_obj));
  if (sol.primal_residual > tolerance || sol.dual_residual > tolerance || sol.gap > tolerance * scale ||
      sol.slackness > tolerance * scale) {
    throw std::runtime_error("simplex optimum failed certification: primal " + std::to_string(sol.primal_residual) +
                             ", dual " + std::to_string(sol.dual_residual) + ", gap " + std::to_string(sol.gap) +
                             ", slackness " + std::to_string(sol.slackness));
  }
  return sol;
}

}  // namespace cirl
