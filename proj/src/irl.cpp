#include "cirl/irl.hpp"

#include "cirl/error.hpp"
#include "cirl/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

namespace cirl {

FMatrix compute_F(const CoeffMatrix& T, const CoeffMatrix& Za, double gamma, FMethod method) {
  if (T.k() != Za.k() || T.entries.cols() != Za.entries.cols()) throw DomainError("compute_F: matrices differ in size");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("compute_F: gamma must lie in [0, 1)");
  const double t_norm = T.inf_norm();
  if (!(gamma * t_norm < 1.0)) {
    throw DivergenceError("compute_F: ||gamma T||_inf = " + std::to_string(gamma * t_norm) +
                          " >= 1, Neumann series does not converge");
  }
  const Eigen::MatrixXd diff = T.entries - Za.entries;
  FMatrix f;
  f.action_id = Za.action_id;
  f.gamma = gamma;
  if (method == FMethod::LinearSolve) {
    const auto k = T.entries.rows();
    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(k, k) - gamma * T.entries;
    f.entries = lhs.partialPivLu().solve(diff);
  } else {
    const double diff_norm = inf_norm(diff);
    Eigen::MatrixXd term = diff;
    Eigen::MatrixXd sum = diff;
    double bound = diff_norm;
    while (bound >= 1e-12) {
      term = gamma * (T.entries * term);
      sum += term;
      bound *= gamma * t_norm;
    }
    f.entries = std::move(sum);
  }
  return f;
}

double CoveringSet::covering_radius() const {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  double r = std::max(points.front() + 1.0, 1.0 - points.back());
  for (std::size_t i = 1; i < points.size(); ++i) r = std::max(r, 0.5 * (points[i] - points[i - 1]));
  return r;
}

CoveringSet covering_set(double c) {
  if (!(c > 0.0)) throw DomainError("covering_set: c must be > 0");
  if (c > 2.0) {
    std::cerr << "warning: covering parameter c = " << c << " exceeds 2, clamping to a single point\n";
    c = 2.0;
  }
  const auto count = static_cast<std::size_t>(stable_ceil(2.0 / c));
  CoveringSet cover;
  cover.c = c;
  cover.points.resize(count);
  const double N = static_cast<double>(count);
  for (std::size_t i = 1; i <= count; ++i) cover.points[i - 1] = -1.0 + (2.0 * static_cast<double>(i) - 1.0) / N;
  return cover;
}

LPStandardForm build_lp(const std::vector<FMatrix>& F_list, const CoveringSet& cover, const BasisSpec& basis) {
  if (F_list.empty()) throw DomainError("build_lp: need at least one non-optimal action");
  if (cover.points.empty()) throw DomainError("build_lp: empty covering set");
  const std::size_t k = F_list.front().k();
  for (const auto& f : F_list) {
    if (f.k() != k) throw DomainError("build_lp: F matrices differ in size");
  }
  const auto kk = static_cast<Eigen::Index>(k);
  const auto rows = static_cast<Eigen::Index>(F_list.size() * cover.points.size());

  // Basis values at the covering points, one column per point.
  Eigen::MatrixXd phi(kk, static_cast<Eigen::Index>(cover.points.size()));
  for (std::size_t p = 0; p < cover.points.size(); ++p) eval_phi_into(basis, cover.points[p], phi.col(static_cast<Eigen::Index>(p)));

  LPStandardForm lp;
  lp.num_vars = 2 * k;
  lp.objective = Eigen::VectorXd::Ones(2 * kk);
  lp.rhs = Eigen::VectorXd::Ones(rows);
  lp.constraint_matrix.resize(rows, 2 * kk);
  lp.row_action.resize(rows);
  lp.row_point.resize(rows);
  Eigen::Index row = 0;
  for (const auto& f : F_list) {
    // alpha^T F phi(s_bar) = g^T alpha with g = F phi(s_bar).
    const Eigen::MatrixXd g = f.entries * phi;
    for (Eigen::Index p = 0; p < g.cols(); ++p, ++row) {
      lp.constraint_matrix.row(row).head(kk) = g.col(p).transpose();
      lp.constraint_matrix.row(row).tail(kk) = -g.col(p).transpose();
      lp.row_action[row] = f.action_id;
      lp.row_point[row] = static_cast<int>(p);
    }
  }
  return lp;
}

RewardVector solve_lp(const LPStandardForm& lp) {
  const LpSolution sol = solve_lp_certified(lp);
  const auto k = static_cast<Eigen::Index>(lp.num_vars / 2);
  return RewardVector(sol.x.head(k) - sol.x.tail(k));
}

std::vector<CoeffMatrix> exact_Z_all(const IRLProblem& problem, const BasisSpec& basis, std::size_t k) {
  std::vector<CoeffMatrix> out;
  out.reserve(problem.num_actions());
  for (std::size_t a = 0; a < problem.num_actions(); ++a) out.push_back(exact_Z(problem.transitions[a], basis, k, static_cast<int>(a)));
  return out;
}

std::vector<FMatrix> compute_F_all(const std::vector<CoeffMatrix>& z, double gamma, FMethod method) {
  if (z.size() < 2) throw DomainError("compute_F_all: need at least two actions");
  std::vector<FMatrix> out;
  out.reserve(z.size() - 1);
  for (std::size_t a = 1; a < z.size(); ++a) out.push_back(compute_F(z.front(), z[a], gamma, method));
  return out;
}

std::vector<FMatrix> exact_F_all(const IRLProblem& problem, const BasisSpec& basis, std::size_t k) {
  return compute_F_all(exact_Z_all(problem, basis, k), problem.gamma);
}

double measured_delta(const IRLProblem& problem, const BasisSpec& basis, std::size_t k) {
  double delta = 0.0;
  for (const auto& z : exact_Z_all(problem, basis, k)) delta = std::max(delta, z.inf_norm());
  return delta;
}

IrlResult solve_irl(const IRLProblem& problem, const BasisSpec& basis, const IrlParams& params, Rng& rng) {
  if (problem.num_actions() < 2) throw DomainError("solve_irl: need at least two actions");
  if (params.k == 0) throw DomainError("solve_irl: k must be >= 1");
  if (params.n && *params.n == 0) throw DomainError("solve_irl: n must be >= 1");
  IrlResult res;
  if (params.n) {
    res.z.reserve(problem.num_actions());
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
      res.z.push_back(estimate_Z(problem.transitions[a], *params.n, params.k, basis, rng, static_cast<int>(a), params.sample_bits));
    }
  } else {
    res.z = exact_Z_all(problem, basis, params.k);
  }
  res.f = compute_F_all(res.z, problem.gamma);
  res.cover = covering_set(params.c);
  const LPStandardForm lp = build_lp(res.f, res.cover, basis);
  res.lp = solve_lp_certified(lp);
  const auto k = static_cast<Eigen::Index>(params.k);
  res.alpha = RewardVector(res.lp.x.head(k) - res.lp.x.tail(k));
  return res;
}

RewardVector continuous_irl(const IRLProblem& problem, const BasisSpec& basis, const IrlParams& params, Rng& rng) {
  return solve_irl(problem, basis, params, rng).alpha;
}

double estimate_beta(const IRLProblem& problem, const BasisSpec& basis, std::size_t k, double c, BetaNorm norm) {
  IrlParams params;
  params.c = c;
  params.k = k;
  Rng unused(0);
  const RewardVector alpha = continuous_irl(problem, basis, params, unused);
  const double size = norm == BetaNorm::L1 ? alpha.l1_norm() : alpha.linf_norm();
  if (!(size > 0.0)) throw IrlInfeasible("estimate_beta: LP returned a zero reward");
  return 1.0 / size;
}

}  // namespace cirl
