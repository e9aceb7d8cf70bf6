#pragma once

#include "cirl/basis.hpp"
#include "cirl/coeff_matrix.hpp"
#include "cirl/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cirl {

/// Dense polynomial in monomial form, coefficients lowest degree first.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// Antiderivative that vanishes at x = -1.
  Polynomial antiderivative_from_minus_one() const;
  double integral_over_interval() const;
};

/// One generator term a (x - b)^(2r).
struct SquareTerm {
  double a = 0.0;
  double b = 0.0;
  int r = 1;
};

/// Polynomial probability density on [-1, 1].
class PolyDensity {
 public:
  PolyDensity() = default;

  /// Sum of the terms, renormalized to unit mass.
  static PolyDensity from_terms(const std::vector<SquareTerm>& terms);
  /// Wraps already-normalized coefficients (used by deserialization).
  static PolyDensity from_coeffs(std::vector<double> coeffs);

  double operator()(double x) const { return poly_(x); }
  double cdf(double x) const { return cdf_(x); }
  const std::vector<double>& coeffs() const { return poly_.coeffs; }
  std::size_t degree() const { return poly_.degree(); }

 private:
  Polynomial poly_;
  Polynomial cdf_;
};

/// P(s'|s) = (1 - s^2) pa(s') + s^2 pb(s').
struct PolyTransition {
  PolyDensity pa;
  PolyDensity pb;
};

/// MDP without reward. transitions[0] is the optimal action a_1.
struct IRLProblem {
  std::vector<PolyTransition> transitions;
  double gamma = 0.7;
  int degree = 4;
  std::uint64_t rng_seed = 0;

  std::size_t num_actions() const { return transitions.size(); }
};

/// Random density: sum_{r=1}^{degree/2} a_r (x - b_r)^(2r), a_r, b_r ~ U(0,1).
PolyDensity gen_polynomial_density(int degree, Rng& rng);

PolyTransition gen_transition(int degree, Rng& rng);

/// transition_pdf(t, s_next, s) = P(s_next | s).
double transition_pdf(const PolyTransition& t, double s_next, double s);

/// Inverse-transform sampling by bisection on the polynomial CDF.
/// bits = 32 resolves the root to 2^-32; bits = 8 reproduces the coarse mode.
double sample_next(const PolyTransition& t, double s, Rng& rng, int bits = 32);

/// Exact k x k truncation of the coefficient matrix via closed-form moments.
CoeffMatrix exact_Z(const PolyTransition& t, const BasisSpec& basis, std::size_t k, int action_id = 0);

/// num_actions independent transitions. Deterministic in `seed`.
IRLProblem gen_problem(std::size_t num_actions, double gamma, int degree, std::uint64_t seed);

/// Text format: header "num_actions gamma degree seed", then per action
/// a "pa c0 c1 ..." line and a "pb c0 c1 ..." line, 17 significant digits.
void write_problem(std::ostream& out, const IRLProblem& problem);
IRLProblem read_problem(std::istream& in);
void save_problem(const std::string& path, const IRLProblem& problem);
IRLProblem load_problem(const std::string& path);

}  // namespace cirl
