#include "cirl/basis.hpp"
#include "cirl/error.hpp"
#include "cirl/quadrature.hpp"
#include "cirl/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cirl;
using doctest::Approx;

namespace {
const BasisSpec kTrig{};
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("eval_basis examples") {
  CHECK(eval_basis(kTrig, 2, 0.5) == Approx(1.0).epsilon(1e-15));
  CHECK(eval_basis(kTrig, 3, 1.0) == Approx(-1.0).epsilon(1e-15));
  CHECK(eval_basis(kTrig, 1, 0.3) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  // Normalization of the constant is forced by its squared integral.
  CHECK(oracle::integrate([](double s) { return eval_basis(kTrig, 1, s) * eval_basis(kTrig, 1, s); }) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eval_basis matches the written-out definition") {
  for (std::size_t n = 1; n <= 30; ++n)
    for (double s = -1.0; s <= 1.0; s += 0.0625) CHECK(eval_basis(kTrig, n, s) == Approx(oracle::phi(n, s)).epsilon(1e-14));
}

TEST_CASE("eval_basis rejects bad arguments") {
  CHECK_THROWS_AS(eval_basis(kTrig, 0, 0.0), DomainError);
  CHECK_THROWS_AS(eval_basis(kTrig, 2, 1.0 + 1e-12), DomainError);
  CHECK_THROWS_AS(eval_basis(kTrig, 2, -1.5), DomainError);
  CHECK_THROWS_AS(eval_basis(kTrig, 2, std::nan("")), DomainError);
  CHECK_THROWS_AS(eval_basis_deriv(kTrig, 0, 0.0), DomainError);
  CHECK_THROWS_AS(eval_phi_vector(kTrig, 0, 0.0), DomainError);
  CHECK_NOTHROW(eval_basis(kTrig, 7, -1.0));
  CHECK_NOTHROW(eval_basis(kTrig, 7, 1.0));
}

TEST_CASE("eval_basis_deriv examples") {
  for (double s : {-1.0, -0.2, 0.0, 0.9}) CHECK(eval_basis_deriv(kTrig, 1, s) == 0.0);
  CHECK(eval_basis_deriv(kTrig, 2, 0.0) == Approx(kPi).epsilon(1e-15));
  CHECK(eval_basis_deriv(kTrig, 5, 0.25) == Approx(-2.0 * kPi).epsilon(1e-14));
}

TEST_CASE("derivative agrees with central differences") {
  Rng rng(11);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(rng.uniform01() * 25);
    const double s = rng.uniform(-1.0 + h, 1.0 - h);
    const double fd = (eval_basis(kTrig, n, s + h) - eval_basis(kTrig, n, s - h)) / (2 * h);
    const double d = eval_basis_deriv(kTrig, n, s);
    // Relative to the derivative scale pi n, which is the natural magnitude.
    CHECK(std::abs(fd - d) <= 1e-6 * std::max(std::abs(d), kPi * static_cast<double>(n)));
  }
}

TEST_CASE("derivative growth bound") {
  for (std::size_t n = 1; n <= 25; ++n) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(eval_basis_deriv(kTrig, n, -1.0 + 2.0 * i / 999.0)));
    CHECK(worst <= kPi * static_cast<double>(n) * (1 + 1e-15));
  }
}

TEST_CASE("eval_phi_vector examples") {
  const auto v1 = eval_phi_vector(kTrig, 1, 0.0);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == Approx(1.0 / std::sqrt(2.0)));
  const auto v3 = eval_phi_vector(kTrig, 3, 0.0);
  CHECK(v3[0] == Approx(1.0 / std::sqrt(2.0)));
  CHECK(v3[1] == Approx(0.0));
  CHECK(v3[2] == Approx(1.0));
  const auto v2 = eval_phi_vector(kTrig, 2, -1.0);
  CHECK(v2[1] == Approx(0.0).epsilon(1e-15));
  Eigen::VectorXd buf(9);
  eval_phi_into(kTrig, 0.37, buf);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(buf[static_cast<Eigen::Index>(n - 1)] == eval_basis(kTrig, n, 0.37));
}

TEST_CASE("orthonormality at k = 25") {
  const GaussLegendre rule(64);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(25, 25);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Eigen::VectorXd p = eval_phi_vector(kTrig, 25, rule.nodes()[q]);
    gram += rule.weights()[q] * p * p.transpose();
  }
  CHECK((gram - Eigen::MatrixXd::Identity(25, 25)).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("moment_integral examples") {
  CHECK(moment_integral(kTrig, 0, 2) == Approx(0.0));
  CHECK(moment_integral(kTrig, 0, 1) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(moment_integral(kTrig, 1, 2) == Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(std::abs(moment_integral(kTrig, 1, 2) - oracle::integrate([](double s) { return s * std::sin(kPi * s); })) <= 1e-10);
  CHECK_THROWS_AS(moment_integral(kTrig, 3, 0), DomainError);
}

TEST_CASE("moment_integral agrees with adaptive quadrature for m <= 12, n <= 25") {
  double worst = 0.0;
  for (std::size_t m = 0; m <= 12; ++m) {
    for (std::size_t n = 1; n <= 25; ++n) {
      const double ref = oracle::integrate([&](double s) { return std::pow(s, static_cast<double>(m)) * oracle::phi(n, s); });
      worst = std::max(worst, std::abs(moment_integral(kTrig, m, n) - ref));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("moment_table matches moment_integral") {
  const Eigen::MatrixXd t = moment_table(kTrig, 9, 6);
  REQUIRE(t.rows() == 9);
  REQUIRE(t.cols() == 7);
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t m = 0; m <= 6; ++m)
      CHECK(t(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(m)) == Approx(moment_integral(kTrig, m, n)).epsilon(1e-13));
}

TEST_CASE("project_polynomial equals direct projection") {
  const std::vector<double> coeffs{0.3, -1.0, 0.5, 2.0, -0.25};
  const Eigen::VectorXd proj = project_polynomial(kTrig, coeffs, 11);
  for (std::size_t n = 1; n <= 11; ++n) {
    const double ref = oracle::integrate([&](double s) {
      double p = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 0;) p = p * s + coeffs[i];
      return p * oracle::phi(n, s);
    });
    CHECK(std::abs(proj[static_cast<Eigen::Index>(n - 1)] - ref) <= 1e-12);
  }
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  for (std::size_t q : {1u, 2u, 5u, 16u, 64u, 128u}) {
    const GaussLegendre rule(q);
    double wsum = 0.0;
    for (double w : rule.weights()) wsum += w;
    CHECK(wsum == Approx(2.0).epsilon(1e-13));
    const auto deg = static_cast<int>(2 * q - 1);
    const double v = rule.integrate([&](double x) { return std::pow(x, deg - 1); });
    const double exact = (deg - 1) % 2 == 0 ? 2.0 / deg : 0.0;
    CHECK(v == Approx(exact).epsilon(1e-12));
    for (std::size_t i = 1; i < rule.size(); ++i) CHECK(rule.nodes()[i] > rule.nodes()[i - 1]);
  }
}
