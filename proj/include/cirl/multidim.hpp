#pragma once

#include "cirl/basis.hpp"
#include "cirl/irl.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/reward.hpp"
#include "cirl/rng.hpp"
#include "cirl/verify.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cirl {

/// Product-form MDP on [-1, 1]^d: P_a(s'|s) = prod_j P_a^(j)(s'^(j) | s^(j)).
/// Each component acts on one coordinate slice, in declaration order.
struct DecomposedProblem {
  std::vector<IRLProblem> components;
  std::vector<std::size_t> dims;

  std::size_t dimension() const;
  std::size_t num_actions() const { return components.empty() ? 0 : components.front().num_actions(); }
  double gamma() const { return components.empty() ? 0.0 : components.front().gamma; }
  /// Throws DomainError unless components share gamma and |A| and every dim is 1.
  void validate() const;
};

/// R(s) = sum_j R^(j)(s^(j)).
struct ComposedReward {
  std::vector<RewardVector> component_rewards;
  std::vector<std::size_t> dims;
};

/// Raised by solve_decomposed; carries the failing component index.
class ComponentError : public std::runtime_error {
 public:
  ComponentError(std::size_t component, const std::string& what, bool infeasible)
      : std::runtime_error("component " + std::to_string(component) + ": " + what), component_(component), infeasible_(infeasible) {}
  std::size_t component() const { return component_; }
  bool infeasible() const { return infeasible_; }

 private:
  std::size_t component_;
  bool infeasible_;
};

/// Runs the one-dimensional solver per component. Component j draws from the
/// stream derived from (rng seed, component rng_seed), so identical
/// components solve identically.
ComposedReward solve_decomposed(const DecomposedProblem& p, const BasisSpec& basis, const IrlParams& params, const Rng& rng);

double eval_composed(const ComposedReward& r, const BasisSpec& basis, std::span<const double> s_vec);

/// d-dimensional rollouts from s0: first step under action a in every
/// component jointly, then the optimal action.
ReturnEstimate composed_returns(const DecomposedProblem& p, const ComposedReward& r, const BasisSpec& basis,
                                std::span<const double> s0, std::size_t horizon, std::size_t rollouts, Rng& rng);

}  // namespace cirl
