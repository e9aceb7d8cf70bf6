#pragma once

#include "cirl/basis.hpp"
#include "cirl/coeff_matrix.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/rng.hpp"

#include <cstddef>
#include <cstdint>

namespace cirl {

/// Riemann zeta values used by the Fourier bounds.
inline constexpr double kZeta2 = 1.6449340668482264;  // pi^2 / 6
inline constexpr double kZeta3 = 1.2020569031595943;

/// Target accuracy of one estimation run.
struct EstimationPlan {
  std::size_t k = 5;
  double epsilon = 0.5;
  double delta = 0.1;
  std::size_t n = 1;

  /// Throws DomainError unless n >= 1, epsilon > 0 and 0 < delta < 1.
  void validate() const;
  /// Plan whose n is the sample count guaranteeing an epsilon-accurate k x k block.
  static EstimationPlan guaranteed(std::size_t k, double epsilon, double delta);
};

/// Sampled coefficient matrix: s_bar ~ U(-1, 1), s' ~ P(.|s_bar) and
/// Zhat = (2/n) sum_r phi(s'_r) phi(s_bar_r)^T, k x k block only.
CoeffMatrix estimate_Z(const PolyTransition& t, std::size_t n, std::size_t k, const BasisSpec& basis, Rng& rng,
                       int action_id = 0, int sample_bits = 32);

/// ceil((8 k^2 / eps^2) ln(2 k^2 / delta)).
std::uint64_t required_samples(std::size_t k, double epsilon, double delta);

/// ceil(max{32, 8^3 / ((beta - c rho)^2 (1/2 - gamma Delta)^4)} k^2 ln(2 k^2 |A| / delta)).
/// Throws DomainError when beta <= c rho or gamma Delta >= 1/2.
double required_samples_irl(std::size_t k, double beta, double c, double rho, double gamma, double Delta,
                            std::size_t num_actions, double delta);

/// Upper bound on the tail norm ||Z - [kZ]||_inf for coefficients bounded by
/// Delta / (zeta(3) i^3 j^3): max{Delta e^{2/(k+1)} / (2 zeta(3) (k+1)^2), Delta / (k+1)^3}.
double truncation_error_bound(double Delta, std::size_t k);

/// Smallest k with truncation_error_bound(Delta, k) <= epsilon.
std::size_t min_truncation_k(double Delta, double epsilon);

/// Lipschitz constant 4 pi Delta zeta(2) / zeta(3) for the trigonometric basis.
double fourier_rho(double Delta);

/// Ceiling that ignores floating-point noise just above an integer.
std::uint64_t stable_ceil(double x);

}  // namespace cirl
