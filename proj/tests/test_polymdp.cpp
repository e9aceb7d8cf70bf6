#include "cirl/error.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

using namespace cirl;
using doctest::Approx;

namespace {
const BasisSpec kTrig{};

PolyTransition uniform_transition() {
  return {PolyDensity::from_coeffs({0.5}), PolyDensity::from_coeffs({0.5})};
}

// CDF of P(.|s) by adaptive quadrature of the density.
double oracle_cdf(const PolyTransition& t, double s, double x) {
  if (x <= -1.0) return 0.0;
  return oracle::integrate([&](double y) { return transition_pdf(t, y, s); }, -1.0, x);
}

double oracle_quantile(const PolyTransition& t, double s, double u) {
  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (oracle_cdf(t, s, mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("single square term renormalizes to 3/2 x^2") {
  const PolyDensity d = PolyDensity::from_terms({{1.0, 0.0, 1}});
  for (double x : {-1.0, -0.4, 0.0, 0.3, 1.0}) CHECK(d(x) == Approx(1.5 * x * x).epsilon(1e-14));
  CHECK(d.cdf(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(d.cdf(0.0) == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("generated densities are nonnegative with unit mass") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 2 * (1 + trial % 4);
    const PolyDensity d = gen_polynomial_density(degree, rng);
    CHECK(d.degree() == static_cast<std::size_t>(degree));
    double lowest = 1e300;
    for (int i = 0; i < 1000; ++i) lowest = std::min(lowest, d(-1.0 + 2.0 * i / 999.0));
    CHECK(lowest >= -1e-12);
    CHECK(std::abs(oracle::integrate([&](double x) { return d(x); }) - 1.0) <= 1e-10);
  }
}

TEST_CASE("density generation is seeded and validates degree") {
  Rng a(77), b(77);
  CHECK(gen_polynomial_density(4, a).coeffs() == gen_polynomial_density(4, b).coeffs());
  Rng r(1);
  CHECK_THROWS_AS(gen_polynomial_density(3, r), DomainError);
  CHECK_THROWS_AS(gen_polynomial_density(0, r), DomainError);
  CHECK_THROWS_AS(gen_polynomial_density(-2, r), DomainError);
}

TEST_CASE("transition endpoints and mass") {
  Rng rng(9);
  const PolyTransition t = gen_transition(4, rng);
  for (double x : {-0.9, -0.1, 0.5, 1.0}) {
    CHECK(transition_pdf(t, x, 0.0) == Approx(t.pa(x)).epsilon(1e-15));
    CHECK(transition_pdf(t, x, 1.0) == Approx(t.pb(x)).epsilon(1e-15));
    CHECK(transition_pdf(t, x, -1.0) == Approx(t.pb(x)).epsilon(1e-15));
    CHECK(transition_pdf(t, x, 0.3) >= 0.0);
  }
  CHECK(oracle::integrate([&](double x) { return transition_pdf(t, x, 0.5); }) == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(transition_pdf(t, 1.2, 0.0), DomainError);
  CHECK_THROWS_AS(transition_pdf(t, 0.0, -1.01), DomainError);
}

TEST_CASE("series reconstruction converges to the density in the interior") {
  Rng rng(21);
  const PolyTransition t = gen_transition(4, rng);
  auto worst_at = [&](std::size_t k) {
    const CoeffMatrix z = exact_Z(t, kTrig, k);
    double worst = 0.0;
    for (double sn : {-0.6, -0.2, 0.1, 0.45, 0.7})
      for (double s : {-0.5, 0.0, 0.35, 0.8}) {
        const double approx = eval_phi_vector(kTrig, k, sn).dot(z.entries * eval_phi_vector(kTrig, k, s));
        worst = std::max(worst, std::abs(approx - transition_pdf(t, sn, s)));
      }
    return worst;
  };
  const double e9 = worst_at(9), e25 = worst_at(25), e81 = worst_at(81);
  CHECK(e25 < e9);
  CHECK(e81 < e25);
  CHECK(e81 < 0.05);
}

TEST_CASE("sample_next stays in range and is deterministic") {
  Rng gen(3);
  const PolyTransition t = gen_transition(4, gen);
  Rng a(100), b(100);
  for (int i = 0; i < 1000; ++i) {
    const double s = -1.0 + 2.0 * (i % 11) / 10.0;
    const double x = sample_next(t, s, a);
    CHECK(x >= -1.0);
    CHECK(x <= 1.0);
    CHECK(x == sample_next(t, s, b));
  }
  CHECK_THROWS_AS(sample_next(t, 2.0, a), DomainError);
  CHECK_THROWS_AS(sample_next(t, 0.0, a, 0), DomainError);
}

TEST_CASE("8-bit sampling lands on cell midpoints") {
  Rng gen(4);
  const PolyTransition t = gen_transition(4, gen);
  Rng rng(8);
  std::set<double> seen;
  for (int i = 0; i < 5000; ++i) {
    const double x = sample_next(t, 0.2, rng, 8);
    const double cell = (x + 1.0) * 128.0 - 0.5;
    CHECK(cell == Approx(std::round(cell)).epsilon(1e-12));
    seen.insert(x);
  }
  CHECK(seen.size() <= 256);
}

TEST_CASE("Kolmogorov-Smirnov distance at s = 0") {
  Rng gen(12);
  const PolyTransition t = gen_transition(4, gen);
  Rng rng(13);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = sample_next(t, 0.0, rng);
  std::sort(xs.begin(), xs.end());
  // Exact CDF of pa from adaptive quadrature, evaluated on a fine grid.
  double ks = 0.0;
  const auto nsamp = static_cast<double>(xs.size());
  for (int g = 0; g <= 400; ++g) {
    const double x = -1.0 + 2.0 * g / 400.0;
    const double ecdf = static_cast<double>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) / nsamp;
    ks = std::max(ks, std::abs(ecdf - oracle_cdf(t, 0.0, x)));
  }
  CHECK(ks <= 0.01);
}

TEST_CASE("chi-square goodness of fit on 32 equal-mass bins") {
  constexpr double kCritical = 61.098;  // chi-square, 31 degrees of freedom, upper 0.001
  Rng gen(31);
  for (int pair = 0; pair < 10; ++pair) {
    const PolyTransition t = gen_transition(4, gen);
    const double s = gen.uniform(-1.0, 1.0);
    std::vector<double> edges;
    for (int b = 1; b < 32; ++b) edges.push_back(oracle_quantile(t, s, b / 32.0));
    std::vector<int> counts(32, 0);
    Rng rng(derive_seed(31, {static_cast<std::uint64_t>(pair)}));
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
      const double x = sample_next(t, s, rng);
      ++counts[static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), x) - edges.begin())];
    }
    const double expected = n / 32.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK_MESSAGE(chi2 < kCritical, "pair " << pair << " chi2 " << chi2);
  }
}

TEST_CASE("exact_Z uniform special case") {
  const CoeffMatrix z = exact_Z(uniform_transition(), kTrig, 7);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(7, 7);
  expected(0, 0) = 1.0;
  CHECK((z.entries - expected).cwiseAbs().maxCoeff() <= 1e-14);
  // Independent double integral of (1/2) phi_i(s') phi_j(s).
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) {
      const double v = 0.5 * oracle::integrate([&](double x) { return oracle::phi(i, x); }) *
                       oracle::integrate([&](double x) { return oracle::phi(j, x); });
      CHECK(std::abs(v - expected(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1))) <= 1e-12);
    }
}

TEST_CASE("exact_Z agrees with tensor quadrature at k = 15") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const PolyTransition t = gen_transition(4, rng);
    CHECK((exact_Z(t, kTrig, 15).entries - quadrature_Z(t, kTrig, 15).entries).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("exact_Z entries against adaptive double integration") {
  Rng rng(44);
  const PolyTransition t = gen_transition(4, rng);
  const CoeffMatrix z = exact_Z(t, kTrig, 6);
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) {
      const double v = oracle::integrate([&](double s) {
        return oracle::phi(j, s) * oracle::integrate([&](double sn) { return transition_pdf(t, sn, s) * oracle::phi(i, sn); });
      });
      CHECK(std::abs(v - z.entries(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1))) <= 1e-10);
    }
}

TEST_CASE("exact_Z has rank at most two and a fixed first row") {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const CoeffMatrix z = exact_Z(gen_transition(4, rng), kTrig, 12);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(z.entries);
    CHECK(svd.singularValues()[2] <= 1e-12 * svd.singularValues()[0]);
    // Unit mass makes phi_1's row e_1.
    CHECK(z.entries(0, 0) == Approx(1.0).epsilon(1e-13));
    CHECK(z.entries.row(0).tail(11).cwiseAbs().maxCoeff() <= 1e-13);
  }
  CHECK_THROWS_AS(exact_Z(uniform_transition(), kTrig, 0), DomainError);
}

TEST_CASE("even pa gives vanishing sine rows at s = 0 weight") {
  // pa even and pb = pa: every sine-row integral of pa is zero.
  const PolyDensity even = PolyDensity::from_terms({{0.7, 0.0, 1}, {0.2, 0.0, 2}});
  const CoeffMatrix z = quadrature_Z({even, even}, kTrig, 9);
  for (Eigen::Index i = 1; i < 9; i += 2) CHECK(z.entries.row(i).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("gen_problem contract") {
  const IRLProblem p = gen_problem(3, 0.7, 4, 42);
  CHECK(p.num_actions() == 3);
  CHECK(p.gamma == 0.7);
  CHECK(p.degree == 4);
  const IRLProblem q = gen_problem(3, 0.7, 4, 42);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(p.transitions[a].pa.coeffs() == q.transitions[a].pa.coeffs());
    CHECK(p.transitions[a].pb.coeffs() == q.transitions[a].pb.coeffs());
  }
  CHECK(gen_problem(3, 0.7, 4, 43).transitions[0].pa.coeffs() != p.transitions[0].pa.coeffs());
  CHECK_NOTHROW(gen_problem(2, 0.0, 2, 1));
  CHECK_THROWS_AS(gen_problem(1, 0.7, 4, 1), DomainError);
  CHECK_THROWS_AS(gen_problem(3, 1.0, 4, 1), DomainError);
  CHECK_THROWS_AS(gen_problem(3, -0.1, 4, 1), DomainError);
  CHECK_THROWS_AS(gen_problem(3, 0.7, 5, 1), DomainError);
}

TEST_CASE("problem text round trip is exact") {
  const IRLProblem p = gen_problem(4, 0.7, 6, 1234567);
  std::stringstream ss;
  write_problem(ss, p);
  const std::string first = ss.str();
  const IRLProblem q = read_problem(ss);
  CHECK(q.num_actions() == 4);
  CHECK(q.gamma == p.gamma);
  CHECK(q.degree == 6);
  CHECK(q.rng_seed == 1234567);
  for (std::size_t a = 0; a < 4; ++a) {
    CHECK(q.transitions[a].pa.coeffs() == p.transitions[a].pa.coeffs());
    CHECK(q.transitions[a].pb.coeffs() == p.transitions[a].pb.coeffs());
  }
  std::stringstream again;
  write_problem(again, q);
  CHECK(again.str() == first);
}

TEST_CASE("malformed problem text is rejected") {
  for (const char* text : {"", "3 0.7 4\n", "2 0.7 4 1\npa 1\n", "2 0.7 4 1\npa 0.5\npb x\npa 0.5\npb 0.5\n",
                           "1 0.7 4 1\npa 0.5\npb 0.5\n", "2 1.5 4 1\npa 0.5\npb 0.5\npa 0.5\npb 0.5\n"}) {
    std::stringstream ss(text);
    CHECK_THROWS(read_problem(ss));
  }
}
