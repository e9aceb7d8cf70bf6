#include "cirl/estimate.hpp"

#include "cirl/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cirl {

void EstimationPlan::validate() const {
  if (k == 0) throw DomainError("estimation plan: k must be >= 1");
  if (n == 0) throw DomainError("estimation plan: n must be >= 1");
  if (!(epsilon > 0.0)) throw DomainError("estimation plan: epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("estimation plan: delta must lie in (0, 1)");
}

EstimationPlan EstimationPlan::guaranteed(std::size_t k, double epsilon, double delta) {
  EstimationPlan plan{k, epsilon, delta, 1};
  plan.n = static_cast<std::size_t>(required_samples(k, epsilon, delta));
  plan.validate();
  return plan;
}

CoeffMatrix estimate_Z(const PolyTransition& t, std::size_t n, std::size_t k, const BasisSpec& basis, Rng& rng,
                       int action_id, int sample_bits) {
  if (n == 0) throw DomainError("estimate_Z: n must be >= 1");
  if (k == 0) throw DomainError("estimate_Z: k must be >= 1");
  const auto kk = static_cast<Eigen::Index>(k);
  constexpr Eigen::Index kBatch = 512;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(kk, kk);
  Eigen::MatrixXd phi_next(kk, kBatch);
  Eigen::MatrixXd phi_start(kk, kBatch);
  std::size_t done = 0;
  while (done < n) {
    const auto batch = static_cast<Eigen::Index>(std::min<std::size_t>(kBatch, n - done));
    for (Eigen::Index r = 0; r < batch; ++r) {
      const double s_bar = rng.uniform(-1.0, 1.0);
      const double s_next = sample_next(t, s_bar, rng, sample_bits);
      eval_phi_into(basis, s_next, phi_next.col(r));
      eval_phi_into(basis, s_bar, phi_start.col(r));
    }
    acc.noalias() += phi_next.leftCols(batch) * phi_start.leftCols(batch).transpose();
    done += static_cast<std::size_t>(batch);
  }
  CoeffMatrix z;
  z.entries = (2.0 / static_cast<double>(n)) * acc;
  z.provenance = Provenance::Estimated;
  z.action_id = action_id;
  return z;
}

std::uint64_t stable_ceil(double x) {
  const double fl = std::floor(x);
  if (x - fl <= 1e-12 * std::max(1.0, std::abs(x))) return static_cast<std::uint64_t>(fl);
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint64_t required_samples(std::size_t k, double epsilon, double delta) {
  if (k == 0) throw DomainError("required_samples: k must be >= 1");
  if (!(epsilon > 0.0)) throw DomainError("required_samples: epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("required_samples: delta must lie in (0, 1)");
  const double k2 = static_cast<double>(k) * static_cast<double>(k);
  return std::max<std::uint64_t>(1, stable_ceil(8.0 * k2 / (epsilon * epsilon) * std::log(2.0 * k2 / delta)));
}

double required_samples_irl(std::size_t k, double beta, double c, double rho, double gamma, double Delta,
                            std::size_t num_actions, double delta) {
  if (k == 0 || num_actions < 2) throw DomainError("required_samples_irl: need k >= 1 and at least two actions");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("required_samples_irl: delta must lie in (0, 1)");
  if (!(c > 0.0) || !(rho >= 0.0) || !(gamma >= 0.0 && gamma < 1.0) || !(Delta > 0.0))
    throw DomainError("required_samples_irl: parameter out of range");
  const double gap = beta - c * rho;
  if (!(gap > 0.0)) throw DomainError("required_samples_irl: infeasible regime, beta <= c rho");
  const double slack = 0.5 - gamma * Delta;
  if (!(slack > 0.0)) throw DomainError("required_samples_irl: infeasible regime, gamma Delta >= 1/2");
  const double k2 = static_cast<double>(k) * static_cast<double>(k);
  const double lead = std::max(32.0, 512.0 / (gap * gap * std::pow(slack, 4)));
  const double n = lead * k2 * std::log(2.0 * k2 * static_cast<double>(num_actions) / delta);
  const double fl = std::floor(n);
  return (n - fl <= 1e-12 * n) ? fl : std::ceil(n);
}

double truncation_error_bound(double Delta, std::size_t k) {
  if (!(Delta > 0.0)) throw DomainError("truncation_error_bound: Delta must be > 0");
  if (k == 0) throw DomainError("truncation_error_bound: k must be >= 1");
  const double k1 = static_cast<double>(k) + 1.0;
  const double hurwitz_part = Delta * std::exp(2.0 / k1) / (2.0 * kZeta3 * k1 * k1);
  const double corner_part = Delta / (k1 * k1 * k1);
  return std::max(hurwitz_part, corner_part);
}

std::size_t min_truncation_k(double Delta, double epsilon) {
  if (!(Delta > 0.0) || !(epsilon > 0.0)) throw DomainError("min_truncation_k: Delta and epsilon must be > 0");
  if (truncation_error_bound(Delta, 1) <= epsilon) return 1;
  std::size_t lo = 1;  // bound(lo) > epsilon
  std::size_t hi = 2;
  while (truncation_error_bound(Delta, hi) > epsilon) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (truncation_error_bound(Delta, mid) <= epsilon) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double fourier_rho(double Delta) {
  if (!(Delta > 0.0)) throw DomainError("fourier_rho: Delta must be > 0");
  return 4.0 * std::numbers::pi * Delta * kZeta2 / kZeta3;
}

}  // namespace cirl
