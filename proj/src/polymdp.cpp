#include "cirl/polymdp.hpp"

#include "cirl/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cirl {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_degree(int degree) {
  if (degree < 2 || degree % 2 != 0) throw DomainError("polynomial degree must be even and >= 2, got " + std::to_string(degree));
}

void check_state(double s, const char* what) {
  if (!(s >= -1.0 && s <= 1.0)) throw DomainError(std::string(what) + " outside [-1, 1]: " + std::to_string(s));
}

}  // namespace

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::antiderivative_from_minus_one() const {
  Polynomial out;
  out.coeffs.assign(coeffs.size() + 1, 0.0);
  for (std::size_t m = 0; m < coeffs.size(); ++m) out.coeffs[m + 1] = coeffs[m] / static_cast<double>(m + 1);
  out.coeffs[0] = -out(-1.0);
  return out;
}

double Polynomial::integral_over_interval() const {
  double acc = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); m += 2) acc += 2.0 * coeffs[m] / static_cast<double>(m + 1);
  return acc;
}

PolyDensity PolyDensity::from_terms(const std::vector<SquareTerm>& terms) {
  if (terms.empty()) throw DomainError("density needs at least one term");
  std::size_t max_deg = 0;
  for (const auto& t : terms) {
    if (t.r < 1) throw DomainError("term power r must be >= 1");
    max_deg = std::max(max_deg, static_cast<std::size_t>(2 * t.r));
  }
  std::vector<double> c(max_deg + 1, 0.0);
  for (const auto& t : terms) {
    // a (x - b)^(2r) = a sum_j binom(2r, j) x^j (-b)^(2r - j)
    const int p = 2 * t.r;
    double binom = 1.0;
    for (int j = 0; j <= p; ++j) {
      c[static_cast<std::size_t>(j)] += t.a * binom * std::pow(-t.b, p - j);
      binom = binom * (p - j) / (j + 1);
    }
  }
  const double mass = Polynomial{c}.integral_over_interval();
  if (!(mass > 0.0)) throw DomainError("density terms have zero mass on [-1, 1]");
  for (double& v : c) v /= mass;
  return from_coeffs(std::move(c));
}

PolyDensity PolyDensity::from_coeffs(std::vector<double> coeffs) {
  if (coeffs.empty()) throw DomainError("density needs coefficients");
  PolyDensity d;
  d.poly_.coeffs = std::move(coeffs);
  d.cdf_ = d.poly_.antiderivative_from_minus_one();
  return d;
}

PolyDensity gen_polynomial_density(int degree, Rng& rng) {
  check_degree(degree);
  std::vector<SquareTerm> terms;
  for (int r = 1; r <= degree / 2; ++r) {
    SquareTerm t;
    t.a = rng.uniform01();
    t.b = rng.uniform01();
    t.r = r;
    terms.push_back(t);
  }
  return PolyDensity::from_terms(terms);
}

PolyTransition gen_transition(int degree, Rng& rng) {
  check_degree(degree);
  PolyTransition t;
  t.pa = gen_polynomial_density(degree, rng);
  t.pb = gen_polynomial_density(degree, rng);
  return t;
}

double transition_pdf(const PolyTransition& t, double s_next, double s) {
  check_state(s, "state");
  check_state(s_next, "next state");
  const double w = s * s;
  return (1.0 - w) * t.pa(s_next) + w * t.pb(s_next);
}

double sample_next(const PolyTransition& t, double s, Rng& rng, int bits) {
  check_state(s, "state");
  if (bits < 1 || bits > 60) throw DomainError("sampling precision must be in [1, 60] bits");
  const double u = rng.uniform01();
  const double w = s * s;
  double lo = -1.0;
  double hi = 1.0;
  for (int i = 0; i < bits; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double cdf = (1.0 - w) * t.pa.cdf(mid) + w * t.pb.cdf(mid);
    if (cdf < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CoeffMatrix exact_Z(const PolyTransition& t, const BasisSpec& basis, std::size_t k, int action_id) {
  if (k == 0) throw DomainError("truncation k must be >= 1");
  // Z_ij = (int pa phi_i)(int (1 - s^2) phi_j) + (int pb phi_i)(int s^2 phi_j)
  const Eigen::VectorXd a = project_polynomial(basis, t.pa.coeffs(), k);
  const Eigen::VectorXd b = project_polynomial(basis, t.pb.coeffs(), k);
  const std::vector<double> one_minus_sq{1.0, 0.0, -1.0};
  const std::vector<double> sq{0.0, 0.0, 1.0};
  const Eigen::VectorXd u = project_polynomial(basis, one_minus_sq, k);
  const Eigen::VectorXd v = project_polynomial(basis, sq, k);
  CoeffMatrix z;
  z.entries = a * u.transpose() + b * v.transpose();
  z.provenance = Provenance::Exact;
  z.action_id = action_id;
  return z;
}

IRLProblem gen_problem(std::size_t num_actions, double gamma, int degree, std::uint64_t seed) {
  if (num_actions < 2) throw DomainError("an IRL problem needs at least two actions");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in [0, 1)");
  check_degree(degree);
  Rng rng(seed);
  IRLProblem p;
  p.gamma = gamma;
  p.degree = degree;
  p.rng_seed = seed;
  for (std::size_t a = 0; a < num_actions; ++a) p.transitions.push_back(gen_transition(degree, rng));
  return p;
}

void write_problem(std::ostream& out, const IRLProblem& problem) {
  out << problem.num_actions() << ' ' << fmt17(problem.gamma) << ' ' << problem.degree << ' ' << problem.rng_seed << '\n';
  auto line = [&out](const char* tag, const PolyDensity& d) {
    out << tag;
    for (double c : d.coeffs()) out << ' ' << fmt17(c);
    out << '\n';
  };
  for (const auto& t : problem.transitions) {
    line("pa", t.pa);
    line("pb", t.pb);
  }
}

IRLProblem read_problem(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("problem file: missing header line");
  std::istringstream hs(header);
  std::size_t num_actions = 0;
  IRLProblem p;
  if (!(hs >> num_actions >> p.gamma >> p.degree >> p.rng_seed)) throw std::runtime_error("problem file: malformed header '" + header + "'");
  if (num_actions < 2) throw DomainError("problem file: need at least two actions");
  if (!(p.gamma >= 0.0 && p.gamma < 1.0)) throw DomainError("problem file: gamma outside [0, 1)");
  auto read_density = [&in](const char* tag) {
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream ls(line);
    std::string got;
    if (!(ls >> got) || got != tag) throw std::runtime_error(std::string("problem file: expected '") + tag + "' line");
    std::vector<double> coeffs;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0') throw std::runtime_error("problem file: bad number '" + tok + "'");
      coeffs.push_back(v);
    }
    return PolyDensity::from_coeffs(std::move(coeffs));
  };
  for (std::size_t a = 0; a < num_actions; ++a) {
    PolyTransition t;
    t.pa = read_density("pa");
    t.pb = read_density("pb");
    p.transitions.push_back(std::move(t));
  }
  return p;
}

void save_problem(const std::string& path, const IRLProblem& problem) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_problem(out, problem);
  if (!out) throw std::runtime_error("write failed: " + path);
}

IRLProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_problem(in);
}

}  // namespace cirl
