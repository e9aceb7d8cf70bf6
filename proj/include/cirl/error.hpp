#pragma once

#include <stdexcept>
#include <string>

namespace cirl {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The Neumann series for F does not converge: ||gamma T||_inf >= 1.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reward linear program has no feasible point. Either the problem is
/// not beta-separable at this (k, c) or the estimated matrices are too noisy.
class IrlInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cirl
