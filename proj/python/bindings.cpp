#include "cirl/error.hpp"
#include "cirl/estimate.hpp"
#include "cirl/harness.hpp"
#include "cirl/irl.hpp"
#include "cirl/polymdp.hpp"
#include "cirl/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cirl;

namespace {

const BasisSpec kTrig{};

std::vector<FMatrix> f_list(const std::vector<Eigen::MatrixXd>& mats, double gamma) {
  std::vector<FMatrix> out;
  for (std::size_t a = 0; a < mats.size(); ++a) {
    FMatrix f;
    f.entries = mats[a];
    f.action_id = static_cast<int>(a + 1);
    f.gamma = gamma;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuous-state inverse reinforcement learning core";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<IrlInfeasible>(m, "IrlInfeasible", PyExc_RuntimeError);

  m.def("eval_basis", [](std::size_t n, double s) { return eval_basis(kTrig, n, s); }, py::arg("n"), py::arg("s"));
  m.def("eval_basis_deriv", [](std::size_t n, double s) { return eval_basis_deriv(kTrig, n, s); }, py::arg("n"), py::arg("s"));
  m.def("eval_phi_vector", [](std::size_t k, double s) { return eval_phi_vector(kTrig, k, s); }, py::arg("k"), py::arg("s"));
  m.def("moment_integral", [](std::size_t mm, std::size_t n) { return moment_integral(kTrig, mm, n); }, py::arg("m"), py::arg("n"));

  py::class_<PolyTransition>(m, "PolyTransition")
      .def_property_readonly("pa", [](const PolyTransition& t) { return t.pa.coeffs(); })
      .def_property_readonly("pb", [](const PolyTransition& t) { return t.pb.coeffs(); })
      .def("pdf", [](const PolyTransition& t, double s_next, double s) { return transition_pdf(t, s_next, s); }, py::arg("s_next"),
           py::arg("s"));

  py::class_<IRLProblem>(m, "IRLProblem")
      .def_readonly("gamma", &IRLProblem::gamma)
      .def_readonly("degree", &IRLProblem::degree)
      .def_readonly("seed", &IRLProblem::rng_seed)
      .def_readonly("transitions", &IRLProblem::transitions)
      .def_property_readonly("num_actions", &IRLProblem::num_actions)
      .def("to_text",
           [](const IRLProblem& p) {
             std::ostringstream os;
             write_problem(os, p);
             return os.str();
           })
      .def_static(
          "from_text",
          [](const std::string& text) {
            std::istringstream is(text);
            return read_problem(is);
          },
          py::arg("text"));

  m.def("gen_problem", &gen_problem, py::arg("num_actions") = 3, py::arg("gamma") = 0.7, py::arg("degree") = 4, py::arg("seed") = 0);

  m.def(
      "sample_next",
      [](const PolyTransition& t, double s, std::uint64_t seed, std::size_t count, int bits) {
        Rng rng(seed);
        std::vector<double> out(count);
        for (auto& x : out) x = sample_next(t, s, rng, bits);
        return out;
      },
      py::arg("transition"), py::arg("s"), py::arg("seed"), py::arg("count") = 1, py::arg("bits") = 32);

  m.def("exact_Z", [](const PolyTransition& t, std::size_t k) { return exact_Z(t, kTrig, k).entries; }, py::arg("transition"),
        py::arg("k"));
  m.def("quadrature_Z", [](const PolyTransition& t, std::size_t k) { return quadrature_Z(t, kTrig, k).entries; },
        py::arg("transition"), py::arg("k"));
  m.def(
      "estimate_Z",
      [](const PolyTransition& t, std::size_t n, std::size_t k, std::uint64_t seed, int bits) {
        Rng rng(seed);
        return estimate_Z(t, n, k, kTrig, rng, 0, bits).entries;
      },
      py::arg("transition"), py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("bits") = 32);

  m.def("required_samples", &required_samples, py::arg("k"), py::arg("epsilon"), py::arg("delta"));
  m.def("required_samples_irl", &required_samples_irl, py::arg("k"), py::arg("beta"), py::arg("c"), py::arg("rho"), py::arg("gamma"),
        py::arg("Delta"), py::arg("num_actions"), py::arg("delta"));
  m.def("truncation_error_bound", &truncation_error_bound, py::arg("Delta"), py::arg("k"));
  m.def("min_truncation_k", &min_truncation_k, py::arg("Delta"), py::arg("epsilon"));
  m.def("fourier_rho", &fourier_rho, py::arg("Delta"));

  m.def(
      "compute_F",
      [](const Eigen::MatrixXd& T, const Eigen::MatrixXd& Za, double gamma, bool series) {
        CoeffMatrix t, z;
        t.entries = T;
        z.entries = Za;
        return compute_F(t, z, gamma, series ? FMethod::Series : FMethod::LinearSolve).entries;
      },
      py::arg("T"), py::arg("Za"), py::arg("gamma"), py::arg("series") = false);
  m.def("exact_F", [](const IRLProblem& p, std::size_t k) {
    std::vector<Eigen::MatrixXd> out;
    for (const auto& f : exact_F_all(p, kTrig, k)) out.push_back(f.entries);
    return out;
  }, py::arg("problem"), py::arg("k"));
  m.def("covering_set", [](double c) { return covering_set(c).points; }, py::arg("c"));

  m.def(
      "continuous_irl",
      [](const IRLProblem& p, std::size_t k, double c, std::optional<std::size_t> n, std::uint64_t seed, int bits) {
        IrlParams params;
        params.k = k;
        params.c = c;
        params.n = n;
        params.sample_bits = bits;
        Rng rng(seed);
        py::gil_scoped_release release;
        return Eigen::VectorXd(continuous_irl(p, kTrig, params, rng).alpha());
      },
      py::arg("problem"), py::arg("k") = 5, py::arg("c") = 0.05, py::arg("n") = py::none(), py::arg("seed") = 0, py::arg("bits") = 32,
      "Reward coefficients; n=None uses the exact coefficient matrices.");

  m.def(
      "estimate_beta",
      [](const IRLProblem& p, std::size_t k, double c, const std::string& norm) {
        if (norm != "l1" && norm != "linf") throw DomainError("norm must be 'l1' or 'linf'");
        return estimate_beta(p, kTrig, k, c, norm == "l1" ? BetaNorm::L1 : BetaNorm::Linf);
      },
      py::arg("problem"), py::arg("k") = 11, py::arg("c") = 0.05, py::arg("norm") = "l1");

  m.def(
      "classify_reward",
      [](const Eigen::VectorXd& alpha, const std::vector<Eigen::MatrixXd>& F, double gamma, std::size_t grid_size) {
        const VerificationReport r = classify_reward(RewardVector(alpha), f_list(F, gamma), kTrig, grid_size);
        py::dict d;
        d["min_margin"] = r.min_margin;
        d["correct"] = r.correct();
        d["grid_size"] = r.grid_size;
        d["per_action_margins"] = Eigen::VectorXd(r.per_action_margins);
        return d;
      },
      py::arg("alpha"), py::arg("F"), py::arg("gamma") = 0.7, py::arg("grid_size") = 100);

  m.def(
      "run_experiment",
      [](const std::map<std::string, std::string>& settings) {
        ExperimentConfig cfg;
        if (auto it = settings.find("experiment"); it != settings.end()) cfg = ExperimentConfig::defaults(parse_experiment_kind(it->second));
        for (const auto& [key, value] : settings) set_config_value(cfg, key, value);
        CsvTable t;
        {
          py::gil_scoped_release release;
          t = run_experiment(cfg);
        }
        std::ostringstream os;
        t.write(os);
        return os.str();
      },
      py::arg("settings"), "Runs one harness experiment from key=value settings and returns the CSV text.");
}
