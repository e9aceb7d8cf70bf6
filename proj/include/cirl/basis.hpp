#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>

namespace cirl {

enum class BasisFamily {
  /// phi_1 = 1/sqrt(2), phi_n = cos(floor(n/2) pi s) for odd n, sin((n/2) pi s) for even n.
  Trigonometric,
};

/// Orthonormal function family on [-1, 1]. Indices are 1-based throughout.
struct BasisSpec {
  BasisFamily family = BasisFamily::Trigonometric;
  std::size_t max_index_hint = 25;
};

/// phi_n(s). Throws DomainError for n == 0 or s outside [-1, 1].
double eval_basis(const BasisSpec& basis, std::size_t n, double s);

/// d/ds phi_n(s). Same domain as eval_basis.
double eval_basis_deriv(const BasisSpec& basis, std::size_t n, double s);

/// [phi_1(s), ..., phi_k(s)].
Eigen::VectorXd eval_phi_vector(const BasisSpec& basis, std::size_t k, double s);

/// Writes phi_1(s)..phi_k(s) into out (k = out.size()).
void eval_phi_into(const BasisSpec& basis, double s, Eigen::Ref<Eigen::VectorXd> out);

/// Closed form of int_{-1}^{1} s^m phi_n(s) ds.
double moment_integral(const BasisSpec& basis, std::size_t m, std::size_t n);

/// Table M(n-1, m) = int s^m phi_n(s) ds for n = 1..k and m = 0..max_m,
/// filled by the integration-by-parts recurrence in m.
Eigen::MatrixXd moment_table(const BasisSpec& basis, std::size_t k, std::size_t max_m);

/// Integrals of a polynomial (monomial coefficients, lowest first) against
/// phi_1..phi_k.
Eigen::VectorXd project_polynomial(const BasisSpec& basis, std::span<const double> coeffs, std::size_t k);

}  // namespace cirl
