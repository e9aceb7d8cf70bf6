#include "cirl/basis.hpp"

#include "cirl/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cirl {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_args(std::size_t n, double s) {
  if (n == 0) throw DomainError("basis index must be >= 1");
  if (!(s >= -1.0 && s <= 1.0)) throw DomainError("basis argument outside [-1, 1]: " + std::to_string(s));
}

// Angular frequency of phi_n; zero only for the constant function.
double frequency(std::size_t n) { return static_cast<double>(n / 2) * kPi; }

// Fills out[m] = int s^m phi_n(s) ds for m = 0..max_m.
void moments_for_index(std::size_t n, std::size_t max_m, double* out) {
  if (n == 1) {
    for (std::size_t m = 0; m <= max_m; ++m) out[m] = (m % 2 == 0) ? 2.0 * kInvSqrt2 / static_cast<double>(m + 1) : 0.0;
    return;
  }
  const double w = frequency(n);
  const double cos_w = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  // C_m = int s^m cos(ws), S_m = int s^m sin(ws); both vanish at m = 0 for w = j pi.
  double c = 0.0;
  double sn = 0.0;
  const bool is_cos = n % 2 == 1;
  out[0] = 0.0;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const double dm = static_cast<double>(m);
    const double c_next = -(dm / w) * sn;
    const double boundary = (m % 2 == 1) ? -2.0 * cos_w / w : 0.0;
    const double s_next = boundary + (dm / w) * c;
    c = c_next;
    sn = s_next;
    out[m] = is_cos ? c : sn;
  }
}

}  // namespace

double eval_basis(const BasisSpec&, std::size_t n, double s) {
  check_args(n, s);
  if (n == 1) return kInvSqrt2;
  const double w = frequency(n);
  return (n % 2 == 1) ? std::cos(w * s) : std::sin(w * s);
}

double eval_basis_deriv(const BasisSpec&, std::size_t n, double s) {
  check_args(n, s);
  if (n == 1) return 0.0;
  const double w = frequency(n);
  return (n % 2 == 1) ? -w * std::sin(w * s) : w * std::cos(w * s);
}

void eval_phi_into(const BasisSpec&, double s, Eigen::Ref<Eigen::VectorXd> out) {
  check_args(1, s);
  const auto k = static_cast<std::size_t>(out.size());
  if (k == 0) return;
  out[0] = kInvSqrt2;
  for (std::size_t n = 2; n <= k; ++n) {
    const double w = frequency(n);
    out[static_cast<Eigen::Index>(n - 1)] = (n % 2 == 1) ? std::cos(w * s) : std::sin(w * s);
  }
}

Eigen::VectorXd eval_phi_vector(const BasisSpec& basis, std::size_t k, double s) {
  if (k == 0) throw DomainError("phi vector length must be >= 1");
  Eigen::VectorXd out(static_cast<Eigen::Index>(k));
  eval_phi_into(basis, s, out);
  return out;
}

double moment_integral(const BasisSpec&, std::size_t m, std::size_t n) {
  if (n == 0) throw DomainError("basis index must be >= 1");
  Eigen::VectorXd buf(static_cast<Eigen::Index>(m + 1));
  moments_for_index(n, m, buf.data());
  return buf[static_cast<Eigen::Index>(m)];
}

Eigen::MatrixXd moment_table(const BasisSpec&, std::size_t k, std::size_t max_m) {
  if (k == 0) throw DomainError("moment table needs k >= 1");
  Eigen::MatrixXd table(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(max_m + 1));
  Eigen::VectorXd buf(static_cast<Eigen::Index>(max_m + 1));
  for (std::size_t n = 1; n <= k; ++n) {
    moments_for_index(n, max_m, buf.data());
    table.row(static_cast<Eigen::Index>(n - 1)) = buf.transpose();
  }
  return table;
}

Eigen::VectorXd project_polynomial(const BasisSpec& basis, std::span<const double> coeffs, std::size_t k) {
  if (coeffs.empty()) return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  const Eigen::MatrixXd table = moment_table(basis, k, coeffs.size() - 1);
  const Eigen::Map<const Eigen::VectorXd> c(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  return table * c;
}

}  // namespace cirl
