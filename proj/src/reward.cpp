#include "cirl/reward.hpp"

#include "cirl/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace cirl {

RewardVector::RewardVector(Eigen::VectorXd alpha) : alpha_(std::move(alpha)), l1_norm_(alpha_.cwiseAbs().sum()) {}

double RewardVector::operator()(const BasisSpec& basis, double s) const {
  double acc = 0.0;
  for (std::size_t n = 1; n <= k(); ++n) acc += alpha_[static_cast<Eigen::Index>(n - 1)] * eval_basis(basis, n, s);
  return acc;
}

RewardVector RewardVector::padded(std::size_t k) const {
  if (k < this->k()) throw DomainError("cannot pad a reward to a shorter length");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  out.head(alpha_.size()) = alpha_;
  return RewardVector(std::move(out));
}

void write_reward(std::ostream& out, const RewardVector& reward) {
  char buf[40];
  for (Eigen::Index i = 0; i < reward.alpha().size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", reward.alpha()[i]);
    out << buf << '\n';
  }
}

RewardVector read_reward(std::istream& in) {
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end == line.c_str()) throw std::runtime_error("reward file: bad number '" + line + "'");
    vals.push_back(v);
  }
  if (vals.empty()) throw std::runtime_error("reward file: no coefficients");
  return RewardVector(Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size())));
}

void save_reward(const std::string& path, const RewardVector& reward) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_reward(out, reward);
}

RewardVector load_reward(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_reward(in);
}

}  // namespace cirl
