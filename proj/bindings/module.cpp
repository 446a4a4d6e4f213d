#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apsumma/fixtures.hpp"
#include "apsumma/harness.hpp"
#include "apsumma/serialization.hpp"

namespace py = pybind11;
using namespace apsumma;

namespace {

MatrixRow make_row(const std::string& family, long n) {
  if (family == "cesaro") return MatrixRow::cesaro(n);
  if (family == "riesz") return MatrixRow::riesz(n);
  if (family == "abel") return MatrixRow::abel(n);
  throw std::invalid_argument("unknown row family: " + family);
}

py::dict report_to_dict(const ClassReport& rep) {
  py::dict d;
  d["class_name"] = rep.class_name;
  d["member"] = rep.member;
  d["K"] = rep.has_K ? py::object(py::float_(rep.K)) : py::object(py::none());
  d["witness_m"] = rep.witness_m;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Almost-periodic trigonometric sums: partial sums, strong means, "
            "moduli, and inequality ratio sweeps";

  py::class_<Term>(m, "Term")
      .def(py::init([](double lambda, Complex ap, Complex am) {
             return Term{lambda, ap, am};
           }),
           py::arg("lam"), py::arg("a_plus") = Complex{0.0, 0.0},
           py::arg("a_minus") = Complex{0.0, 0.0})
      .def_readwrite("lam", &Term::lambda)
      .def_readwrite("a_plus", &Term::a_plus)
      .def_readwrite("a_minus", &Term::a_minus);

  py::class_<APFunction>(m, "APFunction")
      .def(py::init<std::vector<Term>, double>(), py::arg("terms"),
           py::arg("alpha"))
      .def_static("from_json", [](const std::string& s) {
        return apfunction_from_json(Json::parse(s));
      })
      .def("to_json",
           [](const APFunction& f) { return apfunction_to_json(f).dump(); })
      .def_property_readonly("alpha", &APFunction::alpha)
      .def_property_readonly("lambda_max", &APFunction::lambda_max)
      .def_property_readonly("amplitude_sum", &APFunction::amplitude_sum)
      .def("__call__", &APFunction::evaluate, py::arg("x"))
      .def("phi", &APFunction::phi, py::arg("x"), py::arg("t"));

  m.def("exact_coefficient", &exact_coefficient, py::arg("f"), py::arg("lam"));
  m.def("bohr_coefficient", &bohr_coefficient, py::arg("f"), py::arg("lam"),
        py::arg("L"));
  m.def(
      "stepanov_norm",
      [](const APFunction& f, double p) { return stepanov_norm(f, p); },
      py::arg("f"), py::arg("p"));
  m.def("check_omega_membership", &check_omega_membership, py::arg("f"),
        py::arg("alpha"));

  m.def("psi", [](double lam, double eta, double t) {
    return psi({lam, eta}, t);
  });
  m.def("psi_k", &psi_k, py::arg("alpha"), py::arg("k"), py::arg("t"));
  m.def("geometric_sine_sum_closed", &geometric_sine_sum_closed, py::arg("r"),
        py::arg("y"), py::arg("z"));
  m.def("geometric_sine_sum_direct", &geometric_sine_sum_direct, py::arg("r"),
        py::arg("y"), py::arg("z"), py::arg("N"));

  m.def(
      "kernel_partial_sum",
      [](const APFunction& f, double x, int k) {
        const KernelSum ks = kernel_partial_sum(f, x, k, {});
        return py::make_tuple(ks.value, ks.tail_bound, ks.converged);
      },
      py::arg("f"), py::arg("x"), py::arg("k"));
  m.def(
      "kernel_threshold_estimate",
      [](const APFunction& f, double x, int k) {
        const KernelSum ks = kernel_threshold_estimate(f, x, k, {});
        return py::make_tuple(ks.value, ks.tail_bound, ks.converged);
      },
      py::arg("f"), py::arg("x"), py::arg("k"));
  m.def("threshold_partial_sum", &threshold_partial_sum, py::arg("f"),
        py::arg("x"), py::arg("gamma"));
  m.def(
      "strong_mean",
      [](const APFunction& f, double x, const std::string& family, long n,
         double q) { return strong_mean(f, x, make_row(family, n), q); },
      py::arg("f"), py::arg("x"), py::arg("family"), py::arg("n"),
      py::arg("q"));
  m.def("block_strong_mean", &block_strong_mean, py::arg("f"), py::arg("x"),
        py::arg("n"), py::arg("q"));

  m.def(
      "classify",
      [](const std::string& family, long n, double c) {
        py::list out;
        for (const ClassReport& rep : hierarchy_check(make_row(family, n), c))
          out.append(report_to_dict(rep));
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("c") = 2.0);

  m.def("omega_modulus", &omega_modulus, py::arg("f"), py::arg("delta"),
        py::arg("p"));
  m.def("w_x_modulus", &w_x_modulus, py::arg("f"), py::arg("x"),
        py::arg("delta"), py::arg("p"));
  m.def(
      "fit_modulus",
      [](const APFunction& f, double x) {
        const ModulusFunction w = fit_modulus(f, x, default_delta_grid());
        return py::make_tuple(w.grid(), w.values());
      },
      py::arg("f"), py::arg("x"));
  m.def(
      "best_approx_bracket",
      [](const APFunction& f, double sigma) {
        const ApproxBracket b = best_approx_bracket(f, sigma);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("f"), py::arg("sigma"));

  m.def(
      "sweep",
      [](const std::string& config_json) {
        const SweepResult res =
            sweep(sweep_config_from_json(Json::parse(config_json)));
        py::dict out;
        out["csv"] = reports_to_csv(res.reports);
        py::dict mx;
        for (const auto& [k, v] : res.max_ratio) mx[py::str(k)] = v;
        out["max_ratio"] = mx;
        return out;
      },
      py::arg("config_json"));

  m.def(
      "fixture_corpus",
      [](unsigned long long seed, int count) {
        py::list out;
        for (const Fixture& fx : fixture_corpus(seed, count))
          out.append(py::make_tuple(fx.id, fx.f));
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 8);
}
