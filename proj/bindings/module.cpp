#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lzbound/analytic.hpp"
#include "lzbound/approx.hpp"
#include "lzbound/errors.hpp"
#include "lzbound/model.hpp"
#include "lzbound/observables.hpp"
#include "lzbound/specfun.hpp"
#include "lzbound/types.hpp"

namespace py = pybind11;
using namespace lzbound;

PYBIND11_MODULE(_lzbound, m) {
  m.doc() =
      "Driven two-level sweeps: closed-form evolution, adaptive oracle and "
      "asymptotic estimates";

  py::register_exception<InvalidParameter>(m, "InvalidParameterError",
                                           PyExc_ValueError);
  py::register_exception<TimeOutOfRange>(m, "TimeOutOfRangeError",
                                         PyExc_ValueError);
  py::register_exception<OutOfDomain>(m, "OutOfDomainError", PyExc_ValueError);

  py::enum_<PathVariant>(m, "PathVariant")
      .value("A", PathVariant::A)
      .value("B", PathVariant::B)
      .value("C", PathVariant::C);

  py::enum_<Solver>(m, "Solver")
      .value("analytic", Solver::analytic)
      .value("oracle", Solver::oracle);

  py::class_<PathSpec>(m, "PathSpec")
      .def(py::init<PathVariant, double, double, double>(), py::arg("variant"),
           py::arg("x0"), py::arg("z0"), py::arg("T"))
      .def_readonly("variant", &PathSpec::variant)
      .def_readonly("x0", &PathSpec::x0)
      .def_readonly("z0", &PathSpec::z0)
      .def_readonly("T", &PathSpec::total_time)
      .def("r0", &PathSpec::r0)
      .def("alpha0", &PathSpec::alpha0)
      .def("__repr__", [](const PathSpec& s) {
        return std::string("PathSpec(") + variant_name(s.variant) +
               ", x0=" + std::to_string(s.x0) + ", z0=" + std::to_string(s.z0) +
               ", T=" + std::to_string(s.total_time) + ")";
      });

  py::class_<AmplitudePair>(m, "AmplitudePair")
      .def_readonly("a0", &AmplitudePair::a0)
      .def_readonly("a1", &AmplitudePair::a1)
      .def("norm2", &AmplitudePair::norm2);

  py::class_<EvolutionSeries>(m, "EvolutionSeries")
      .def_readonly("t", &EvolutionSeries::t)
      .def_readonly("amplitudes", &EvolutionSeries::amplitudes)
      .def_readonly("infidelity", &EvolutionSeries::infidelity)
      .def_readonly("solver", &EvolutionSeries::solver);

  py::class_<InfidelityPoint>(m, "InfidelityPoint")
      .def_readonly("t", &InfidelityPoint::t)
      .def_readonly("value", &InfidelityPoint::value);

  m.def("initial_state", &initial_state, py::arg("spec"));
  m.def(
      "solve_path",
      [](const PathSpec& spec, double t) { return solve_path(spec, t); },
      py::arg("spec"), py::arg("t"));
  m.def(
      "evolve_series",
      [](const PathSpec& spec, int n_samples, Solver solver) {
        return evolve_series(spec, n_samples, solver);
      },
      py::arg("spec"), py::arg("n_samples"),
      py::arg("solver") = Solver::analytic);
  m.def(
      "final_infidelity",
      [](const PathSpec& spec, Solver solver) {
        return final_infidelity(spec, solver);
      },
      py::arg("spec"), py::arg("solver") = Solver::analytic);
  m.def(
      "find_infidelity_zeros",
      [](const PathSpec& spec, Solver solver, double zero_tol) {
        return find_infidelity_zeros(spec, solver, zero_tol);
      },
      py::arg("spec"), py::arg("solver") = Solver::analytic,
      py::arg("zero_tol") = 0.0);
  m.def("path_c_closed_infidelity", &path_c_closed_infidelity,
        py::arg("spec"), py::arg("t"));
  m.def("metric_length", &metric_length, py::arg("spec"));

  m.def("lz_final_infidelity", &lz_final_infidelity, py::arg("spec"));
  m.def(
      "lz_validity_window",
      [](double x0, double z0) -> std::optional<std::pair<double, double>> {
        auto w = lz_validity_window(x0, z0);
        if (!w) return std::nullopt;
        return std::make_pair(w->t_minus, w->t_plus);
      },
      py::arg("x0"), py::arg("z0"));
  m.def("diabatic_limit", &diabatic_limit, py::arg("spec"));
  m.def("apt_envelope", &apt_envelope, py::arg("spec"));
  m.def("apt_phase", &apt_phase, py::arg("spec"));
  m.def("apt_final_infidelity", &apt_final_infidelity, py::arg("spec"));
  m.def("apt_general_second_order", &apt_general_second_order,
        py::arg("spec"));
  m.def("crossover_time", &crossover_time, py::arg("x0"), py::arg("z0"));
  m.def("crossover_threshold_ratio", &crossover_threshold_ratio);

  m.def("gamma_complex", &gamma_complex, py::arg("z"));
  m.def(
      "pcf_d", [](Cd eta, Cd xi) { return pcf_d(eta, xi); }, py::arg("eta"),
      py::arg("xi"));
  m.def(
      "gauss_2f1",
      [](Cd a, Cd b, Cd c, double z) { return gauss_2f1(a, b, c, z); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("lambert_w_m1", &lambert_w_m1, py::arg("a"));
}
