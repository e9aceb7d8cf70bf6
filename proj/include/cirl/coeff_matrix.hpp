#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace cirl {

enum class Provenance { Exact, Estimated };

/// k x k truncation of an infinite coefficient matrix Z^(a), exact or sampled.
struct CoeffMatrix {
  Eigen::MatrixXd entries;
  Provenance provenance = Provenance::Exact;
  int action_id = 0;

  std::size_t k() const { return static_cast<std::size_t>(entries.rows()); }
  double inf_norm() const { return entries.cwiseAbs().rowwise().sum().maxCoeff(); }
};

/// Induced infinity norm: max absolute row sum.
inline double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace cirl
