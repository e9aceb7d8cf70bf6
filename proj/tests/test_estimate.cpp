#include "cirl/error.hpp"
#include "cirl/estimate.hpp"
#include "cirl/irl.hpp"
#include "oracles.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cirl;
using doctest::Approx;
using oracle::HighPrecision;

namespace {
const BasisSpec kTrig{};
}

TEST_CASE("required_samples examples") {
  CHECK(required_samples(1, 1.0, 2.0 / std::numbers::e) == 8);
  CHECK(required_samples(5, 0.5, 0.1) == 4972);
  // High-precision evaluation of the same formula.
  const HighPrecision exact = HighPrecision(800) * log(HighPrecision(500));
  CHECK(static_cast<std::uint64_t>(ceil(exact)) == 4972);
  CHECK_THROWS_AS(required_samples(0, 0.5, 0.1), DomainError);
  CHECK_THROWS_AS(required_samples(5, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(required_samples(5, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(required_samples(5, 0.5, 0.0), DomainError);
}

TEST_CASE("required_samples is monotone") {
  for (std::size_t k = 1; k < 30; ++k) {
    CHECK(required_samples(k + 1, 0.5, 0.1) >= required_samples(k, 0.5, 0.1));
    for (double eps : {0.1, 0.3, 1.0, 2.0}) {
      CHECK(required_samples(k, eps * 0.9, 0.1) >= required_samples(k, eps, 0.1));
      CHECK(required_samples(k, eps, 0.05) >= required_samples(k, eps, 0.1));
    }
  }
}

TEST_CASE("stable_ceil ignores noise above integers") {
  CHECK(stable_ceil(8.0) == 8);
  CHECK(stable_ceil(8.0 * (1 + 1e-15)) == 8);
  CHECK(stable_ceil(8.001) == 9);
  CHECK(stable_ceil(0.2) == 1);
}

TEST_CASE("EstimationPlan") {
  const EstimationPlan p = EstimationPlan::guaranteed(5, 0.5, 0.1);
  CHECK(p.n == 4972);
  CHECK_NOTHROW(p.validate());
  EstimationPlan bad = p;
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.delta = 1.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("required_samples_irl branches") {
  // The constant 32 only wins when (beta - c rho)^2 (1/2 - gamma Delta)^4 >= 16.
  const double n = required_samples_irl(5, 100.0, 0.001, 1.0, 0.01, 1.0, 3, 0.1);
  CHECK(n == static_cast<double>(stable_ceil(32.0 * 25.0 * std::log(2.0 * 25.0 * 3.0 / 0.1))));
  // Otherwise the separability term dominates.
  const double beta = 0.5, c = 0.01, rho = 10.0, gamma = 0.3, Delta = 1.0;
  const double factor = 512.0 / (std::pow(beta - c * rho, 2) * std::pow(0.5 - gamma * Delta, 4));
  CHECK(required_samples_irl(5, beta, c, rho, gamma, Delta, 3, 0.1) ==
        static_cast<double>(stable_ceil(factor * 25.0 * std::log(2.0 * 25.0 * 3.0 / 0.1))));
  for (double d : {0.01, 0.02, 0.04, 0.08, 0.16, 0.32})
    CHECK(required_samples_irl(5, beta, c, rho, gamma, Delta, 3, 2 * d) <= required_samples_irl(5, beta, c, rho, gamma, Delta, 3, d));
}

TEST_CASE("required_samples_irl rejects the infeasible regime") {
  // beta^-1 = 26.5, c = 0.05, Delta = 1.45, gamma = 0.7.
  CHECK_THROWS_AS(required_samples_irl(5, 1.0 / 26.5, 0.05, fourier_rho(1.45), 0.7, 1.45, 3, 0.1), DomainError);
  CHECK_THROWS_AS(required_samples_irl(5, 1.0, 0.1, 10.0, 0.3, 1.0, 3, 0.1), DomainError);   // beta == c rho
  CHECK_THROWS_AS(required_samples_irl(5, 1.0, 0.001, 1.0, 0.5, 1.0, 3, 0.1), DomainError);  // gamma Delta == 1/2
}

TEST_CASE("truncation_error_bound closed form") {
  const HighPrecision z3 = boost::math::zeta(HighPrecision(3));
  for (double Delta : {0.1, 1.0, 10.0})
    for (std::size_t k : {1u, 2u, 9u, 40u, 1000u}) {
      const HighPrecision kp1 = HighPrecision(k + 1);
      const HighPrecision a = HighPrecision(Delta) * exp(HighPrecision(2) / kp1) / (2 * z3 * kp1 * kp1);
      const HighPrecision b = HighPrecision(Delta) / (kp1 * kp1 * kp1);
      const double ref = static_cast<double>(a > b ? a : b);
      CHECK(truncation_error_bound(Delta, k) == Approx(ref).epsilon(1e-14));
    }
  CHECK(truncation_error_bound(1.0, 10000) < 1e-6);
  CHECK_THROWS_AS(truncation_error_bound(0.0, 3), DomainError);
  CHECK_THROWS_AS(truncation_error_bound(1.0, 0), DomainError);
}

TEST_CASE("truncation_error_bound strictly decreasing") {
  for (double Delta : {0.1, 1.0, 10.0})
    for (std::size_t k = 1; k < 100; ++k) CHECK(truncation_error_bound(Delta, k + 1) < truncation_error_bound(Delta, k));
}

TEST_CASE("min_truncation_k minimality and scaling") {
  for (double Delta : {0.1, 1.0, 10.0}) {
    CHECK(min_truncation_k(Delta, truncation_error_bound(Delta, 1)) == 1);
    CHECK(min_truncation_k(Delta, 10.0 * Delta) == 1);
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      const std::size_t k = min_truncation_k(Delta, eps);
      CHECK(truncation_error_bound(Delta, k) <= eps);
      if (k > 1) CHECK(truncation_error_bound(Delta, k - 1) > eps);
      // Direct linear search oracle.
      std::size_t direct = 1;
      while (truncation_error_bound(Delta, direct) > eps) ++direct;
      CHECK(direct == k);
      CHECK(min_truncation_k(Delta, eps / 100) <= 12 * k);
    }
  }
}

TEST_CASE("fourier_rho") {
  const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
  const HighPrecision ref = 4 * pi * boost::math::zeta(HighPrecision(2)) / boost::math::zeta(HighPrecision(3));
  CHECK(std::abs(fourier_rho(1.0) - static_cast<double>(ref)) <= 1e-12);
  CHECK(fourier_rho(1.0) == Approx(17.20).epsilon(1e-3));
  for (double d : {0.01, 0.5, 3.0}) CHECK(fourier_rho(2 * d) == Approx(2 * fourier_rho(d)).epsilon(1e-15));
  CHECK_THROWS_AS(fourier_rho(0.0), DomainError);
  CHECK(kZeta2 == Approx(static_cast<double>(boost::math::zeta(HighPrecision(2)))).epsilon(1e-16));
  CHECK(kZeta3 == Approx(static_cast<double>(boost::math::zeta(HighPrecision(3)))).epsilon(1e-16));
}

TEST_CASE("estimate_Z basic contract") {
  Rng gen(1);
  const PolyTransition t = gen_transition(4, gen);
  Rng a(5), b(5);
  const CoeffMatrix za = estimate_Z(t, 1500, 7, kTrig, a, 2);
  const CoeffMatrix zb = estimate_Z(t, 1500, 7, kTrig, b, 2);
  CHECK(za.entries == zb.entries);
  CHECK(za.provenance == Provenance::Estimated);
  CHECK(za.action_id == 2);
  CHECK(za.k() == 7);
  CHECK(za.entries.cwiseAbs().maxCoeff() <= 2.0);
  Rng c(6);
  const CoeffMatrix single = estimate_Z(t, 1, 3, kTrig, c);
  CHECK(single.entries.cwiseAbs().maxCoeff() <= 2.0);
  CHECK(single.entries(0, 0) == Approx(1.0));  // 2 * phi_1^2
  CHECK_THROWS_AS(estimate_Z(t, 0, 3, kTrig, c), DomainError);
  CHECK_THROWS_AS(estimate_Z(t, 10, 0, kTrig, c), DomainError);
}

TEST_CASE("estimate_Z batches do not change the estimator") {
  // Sum of per-sample outer products computed directly.
  Rng gen(8);
  const PolyTransition t = gen_transition(4, gen);
  for (std::size_t n : {1u, 511u, 512u, 513u, 1300u}) {
    Rng r1(n), r2(n);
    const CoeffMatrix z = estimate_Z(t, n, 4, kTrig, r1);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(4, 4);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = r2.uniform(-1.0, 1.0);
      const double sn = sample_next(t, s, r2);
      acc += eval_phi_vector(kTrig, 4, sn) * eval_phi_vector(kTrig, 4, s).transpose();
    }
    acc *= 2.0 / static_cast<double>(n);
    CHECK((z.entries - acc).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("estimate_Z is unbiased on one transition") {
  Rng gen(17);
  const PolyTransition t = gen_transition(4, gen);
  const CoeffMatrix exact = exact_Z(t, kTrig, 5);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(5, 5), sq = Eigen::MatrixXd::Zero(5, 5);
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(17, {static_cast<std::uint64_t>(i)}));
    const Eigen::MatrixXd z = estimate_Z(t, 2000, 5, kTrig, rng).entries;
    sum += z;
    sq += z.cwiseProduct(z);
  }
  const Eigen::MatrixXd mean = sum / trials;
  const Eigen::MatrixXd var = (sq - trials * mean.cwiseProduct(mean)) / (trials - 1);
  for (Eigen::Index i = 0; i < 5; ++i)
    for (Eigen::Index j = 0; j < 5; ++j) {
      const double se = std::sqrt(std::max(var(i, j), 0.0) / trials);
      CHECK(std::abs(mean(i, j) - exact.entries(i, j)) <= 3.0 * se + 1e-12);
    }
}

TEST_CASE("error propagation from coefficient matrices to F") {
  const double gamma = 0.7;
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const IRLProblem p = gen_problem(3, gamma, 4, seed);
    const auto exact = exact_Z_all(p, kTrig, 5);
    Rng rng(seed);
    std::vector<CoeffMatrix> est;
    for (std::size_t a = 0; a < 3; ++a) est.push_back(estimate_Z(p.transitions[a], 20000, 5, kTrig, rng, static_cast<int>(a)));
    double eps = 0.0, Delta = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      eps = std::max(eps, inf_norm(est[a].entries - exact[a].entries));
      Delta = std::max({Delta, exact[a].inf_norm(), est[a].inf_norm()});
    }
    if (gamma * Delta >= 1.0) continue;
    const auto f = compute_F_all(exact, gamma);
    const auto fh = compute_F_all(est, gamma);
    for (std::size_t a = 0; a < f.size(); ++a)
      CHECK(inf_norm(fh[a].entries - f[a].entries) <= 2.0 * eps / std::pow(1.0 - gamma * Delta, 2));
    ++checked;
  }
  CHECK(checked >= 15);
}
