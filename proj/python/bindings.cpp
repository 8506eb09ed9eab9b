#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pointint/analysis.hpp"
#include "pointint/cli.hpp"
#include "pointint/connection.hpp"
#include "pointint/dirac.hpp"
#include "pointint/errors.hpp"
#include "pointint/schrodinger.hpp"

namespace py = pybind11;
using namespace pointint;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transfer matrices and scattering for one-dimensional point interactions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base);
  py::register_exception<NotConnectionForm>(m, "NotConnectionForm", base);
  py::register_exception<SingularProjection>(m, "SingularProjection", base);
  py::register_exception<ModesRequireFreeSpace>(m, "ModesRequireFreeSpace", base);
  py::register_exception<DegenerateModes>(m, "DegenerateModes", base);
  py::register_exception<SingularRenormalization>(m, "SingularRenormalization", base);

  py::class_<ConnectionParams>(m, "ConnectionParams")
      .def(py::init(&ConnectionParams::make), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
           py::arg("delta"), py::arg("theta") = 0.0, py::arg("tol") = kConstructionTol)
      .def_property_readonly("alpha", &ConnectionParams::alpha)
      .def_property_readonly("beta", &ConnectionParams::beta)
      .def_property_readonly("gamma", &ConnectionParams::gamma)
      .def_property_readonly("delta", &ConnectionParams::delta)
      .def_property_readonly("theta", &ConnectionParams::theta)
      .def("canonical", &ConnectionParams::canonical)
      .def("__repr__", [](const ConnectionParams& p) {
        std::ostringstream os;
        os.precision(17);
        os << "ConnectionParams(" << p.alpha() << ", " << p.beta() << ", " << p.gamma() << ", "
           << p.delta() << ", theta=" << p.theta() << ")";
        return os.str();
      });

  py::class_<ModePair>(m, "ModePair")
      .def_readonly("u_plus", &ModePair::u_plus)
      .def_readonly("u_minus", &ModePair::u_minus)
      .def_readonly("v_plus", &ModePair::v_plus)
      .def_readonly("v_minus", &ModePair::v_minus)
      .def("is_biorthogonal", &ModePair::is_biorthogonal, py::arg("tol") = kConstructionTol);

  py::class_<ScatteringResult>(m, "ScatteringResult")
      .def_readonly("t_amp", &ScatteringResult::t_amp)
      .def_readonly("r_amp", &ScatteringResult::r_amp)
      .def_readonly("t_prob", &ScatteringResult::t_prob)
      .def_readonly("r_prob", &ScatteringResult::r_prob);

  m.def("as_matrix", &as_matrix);
  m.def("decompose", &decompose, py::arg("m"), py::arg("tol") = kDecomposeTol);
  m.def("conserves_current", &conserves_current, py::arg("m"), py::arg("tol") = kConservationTol);
  m.def("delta_connection", py::overload_cast<double>(&delta_connection));
  m.def("epsilon_connection", &epsilon_connection);
  m.def("scatter", &scatter);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "pointint");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run a CLI invocation in-process; returns (exit_code, stdout, stderr).");

  auto s = m.def_submodule("schrodinger", "Non-relativistic three-delta machinery");
  py::class_<schrodinger::NonRelMedium>(s, "NonRelMedium")
      .def(py::init<double, double, double>(), py::arg("mass"), py::arg("wave_number"),
           py::arg("vector_potential") = 0.0)
      .def_property_readonly("mass", &schrodinger::NonRelMedium::mass)
      .def_property_readonly("wave_number", &schrodinger::NonRelMedium::wave_number)
      .def_property_readonly("vector_potential", &schrodinger::NonRelMedium::vector_potential);
  py::class_<schrodinger::DeltaTriple>(s, "DeltaTriple")
      .def(py::init([](double vp, double v0, double vm, double a, double A) {
             return schrodinger::DeltaTriple{vp, v0, vm, a, A};
           }),
           py::arg("v_plus"), py::arg("v_zero"), py::arg("v_minus"), py::arg("half_spacing"),
           py::arg("vector_potential") = 0.0)
      .def_readwrite("v_plus", &schrodinger::DeltaTriple::v_plus)
      .def_readwrite("v_zero", &schrodinger::DeltaTriple::v_zero)
      .def_readwrite("v_minus", &schrodinger::DeltaTriple::v_minus)
      .def_readwrite("half_spacing", &schrodinger::DeltaTriple::half_spacing)
      .def_readwrite("vector_potential", &schrodinger::DeltaTriple::vector_potential);
  s.def("propagator", &schrodinger::propagator, py::arg("x"), py::arg("medium"));
  s.def("mode_vectors", &schrodinger::mode_vectors);
  s.def("three_delta_transfer", &schrodinger::three_delta_transfer);
  s.def("closed_form_transfer", &schrodinger::closed_form_transfer);
  s.def("renormalized_strengths", &schrodinger::renormalized_strengths, py::arg("target"),
        py::arg("a"), py::arg("mass"));
  s.def("transmission", &schrodinger::transmission);

  auto d = m.def_submodule("dirac", "Relativistic barrier machinery");
  py::class_<dirac::DiracMedium>(d, "DiracMedium")
      .def(py::init<double, double, double, double, double>(), py::arg("mass"), py::arg("energy"),
           py::arg("scalar") = 0.0, py::arg("vector") = 0.0, py::arg("vector_potential") = 0.0)
      .def_property_readonly("k_plus", &dirac::DiracMedium::k_plus)
      .def_property_readonly("k_minus", &dirac::DiracMedium::k_minus)
      .def_property_readonly("k_tilde", &dirac::DiracMedium::k_tilde);
  py::class_<dirac::BarrierParams>(d, "BarrierParams")
      .def(py::init([](double s_, double v_, double theta) {
             return dirac::BarrierParams{s_, v_, theta};
           }),
           py::arg("s"), py::arg("v"), py::arg("theta") = 0.0)
      .def_readwrite("s", &dirac::BarrierParams::s)
      .def_readwrite("v", &dirac::BarrierParams::v)
      .def_readwrite("theta", &dirac::BarrierParams::theta);
  py::enum_<dirac::BarrierKind>(d, "BarrierKind")
      .value("delta", dirac::BarrierKind::kDelta)
      .value("epsilon", dirac::BarrierKind::kEpsilon)
      .value("trig", dirac::BarrierKind::kTrig)
      .value("hyperbolic", dirac::BarrierKind::kHyperbolic);
  py::class_<dirac::BarrierClass>(d, "BarrierClass")
      .def_readonly("kind", &dirac::BarrierClass::kind)
      .def_readonly("strength", &dirac::BarrierClass::strength);
  d.def("propagator", &dirac::propagator, py::arg("x"), py::arg("medium"));
  d.def("free_mode_vectors", &dirac::free_mode_vectors, py::arg("energy"), py::arg("mass"));
  d.def("barrier_limit", &dirac::barrier_limit);
  d.def("finite_barrier_transfer", &dirac::finite_barrier_transfer, py::arg("b"), py::arg("a"),
        py::arg("energy"), py::arg("mass"));
  d.def("transmission", &dirac::transmission, py::arg("p"), py::arg("energy"), py::arg("mass"));
  d.def("classify", &dirac::classify);

  auto a = m.def_submodule("analysis", "Convergence sweeps and correspondence tables");
  py::class_<analysis::SweepRow>(a, "SweepRow")
      .def_readonly("x", &analysis::SweepRow::x)
      .def_readonly("value", &analysis::SweepRow::value)
      .def_readonly("label", &analysis::SweepRow::label);
  a.def("nonrel_convergence",
        [](const ConnectionParams& p, double mass, double k, const std::vector<double>& a_list) {
          return analysis::nonrel_convergence(p, mass, k, a_list);
        });
  a.def("dirac_convergence", [](const dirac::BarrierParams& b, double energy, double mass,
                                const std::vector<double>& a_list) {
    return analysis::dirac_convergence(b, energy, mass, a_list);
  });
  a.def("correspondence_table",
        [](const ConnectionParams& p, double mass, const std::vector<double>& kinetic) {
          return analysis::correspondence_table(p, mass, kinetic);
        });
  a.def("high_energy_asymptote", [](const ConnectionParams& p) {
    const auto lim = analysis::high_energy_asymptote(p);
    return py::make_tuple(lim.nonrel_limit, lim.dirac_limit);
  });
  a.def("log_log_slope", [](const std::vector<analysis::SweepRow>& rows) {
    return analysis::log_log_slope(rows);
  });
}
