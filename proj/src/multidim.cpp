#include "cirl/multidim.hpp"

#include "cirl/error.hpp"

#include <cmath>
#include <numeric>

namespace cirl {

std::size_t DecomposedProblem::dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

void DecomposedProblem::validate() const {
  if (components.empty()) throw DomainError("decomposed problem has no components");
  if (dims.size() != components.size()) throw DomainError("decomposed problem: one dimension entry per component required");
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (dims[j] != 1) throw DomainError("decomposed problem: only one-dimensional components are supported");
    if (components[j].num_actions() != num_actions()) throw DomainError("decomposed problem: components disagree on the action set");
    if (components[j].gamma != gamma()) throw DomainError("decomposed problem: components disagree on gamma");
  }
}

ComposedReward solve_decomposed(const DecomposedProblem& p, const BasisSpec& basis, const IrlParams& params, const Rng& rng) {
  p.validate();
  ComposedReward out;
  out.dims = p.dims;
  for (std::size_t j = 0; j < p.components.size(); ++j) {
    Rng stream = rng.child({p.components[j].rng_seed});
    try {
      out.component_rewards.push_back(continuous_irl(p.components[j], basis, params, stream));
    } catch (const IrlInfeasible& e) {
      throw ComponentError(j, e.what(), true);
    } catch (const std::exception& e) {
      throw ComponentError(j, e.what(), false);
    }
  }
  return out;
}

double eval_composed(const ComposedReward& r, const BasisSpec& basis, std::span<const double> s_vec) {
  if (r.component_rewards.size() != r.dims.size()) throw DomainError("eval_composed: malformed reward");
  const std::size_t d = std::accumulate(r.dims.begin(), r.dims.end(), std::size_t{0});
  if (s_vec.size() != d) throw DomainError("eval_composed: state has " + std::to_string(s_vec.size()) + " coordinates, expected " + std::to_string(d));
  double total = 0.0;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < r.dims.size(); ++j) {
    if (r.dims[j] != 1) throw DomainError("eval_composed: only one-dimensional components are supported");
    total += r.component_rewards[j](basis, s_vec[offset]);
    offset += r.dims[j];
  }
  return total;
}

ReturnEstimate composed_returns(const DecomposedProblem& p, const ComposedReward& r, const BasisSpec& basis,
                                std::span<const double> s0, std::size_t horizon, std::size_t rollouts, Rng& rng) {
  p.validate();
  if (horizon == 0 || rollouts == 0) throw DomainError("composed_returns: horizon and rollouts must be >= 1");
  if (s0.size() != p.dimension()) throw DomainError("composed_returns: start state has the wrong dimension");
  const std::size_t d = s0.size();
  const double gamma = p.gamma();
  ReturnEstimate est;
  est.mean.resize(static_cast<Eigen::Index>(p.num_actions()));
  est.std_error.resize(static_cast<Eigen::Index>(p.num_actions()));
  std::vector<double> s(d);
  for (std::size_t a = 0; a < p.num_actions(); ++a) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t roll = 0; roll < rollouts; ++roll) {
      std::copy(s0.begin(), s0.end(), s.begin());
      double discount = 1.0;
      double total = 0.0;
      for (std::size_t step = 1; step <= horizon; ++step) {
        const std::size_t action = step == 1 ? a : 0;
        for (std::size_t j = 0; j < d; ++j) s[j] = sample_next(p.components[j].transitions[action], s[j], rng);
        discount *= gamma;
        total += discount * eval_composed(r, basis, s);
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

}  // namespace cirl
