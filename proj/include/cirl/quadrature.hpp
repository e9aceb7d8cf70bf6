#pragma once

#include <cstddef>
#include <vector>

namespace cirl {

/// Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  /// Nodes from Newton iteration on the Legendre three-term recurrence.
  explicit GaussLegendre(std::size_t num_nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace cirl
