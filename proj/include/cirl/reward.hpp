#pragma once

#include "cirl/basis.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace cirl {

/// R(s) = sum_i alpha_i phi_i(s), truncated to k terms.
class RewardVector {
 public:
  RewardVector() = default;
  explicit RewardVector(Eigen::VectorXd alpha);

  const Eigen::VectorXd& alpha() const { return alpha_; }
  std::size_t k() const { return static_cast<std::size_t>(alpha_.size()); }
  double l1_norm() const { return l1_norm_; }
  double linf_norm() const { return alpha_.size() == 0 ? 0.0 : alpha_.cwiseAbs().maxCoeff(); }

  double operator()(const BasisSpec& basis, double s) const;
  /// Same reward with zero coefficients appended up to length k.
  RewardVector padded(std::size_t k) const;
  RewardVector scaled(double factor) const { return RewardVector(factor * alpha_); }

 private:
  Eigen::VectorXd alpha_;
  double l1_norm_ = 0.0;
};

/// One coefficient per line, 17 significant digits.
void write_reward(std::ostream& out, const RewardVector& reward);
RewardVector read_reward(std::istream& in);
void save_reward(const std::string& path, const RewardVector& reward);
RewardVector load_reward(const std::string& path);

}  // namespace cirl
