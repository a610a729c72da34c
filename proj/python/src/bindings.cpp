#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "hankelflow/bessel.hpp"
#include "hankelflow/errors.hpp"
#include "hankelflow/flow_fields.hpp"
#include "hankelflow/hankel.hpp"
#include "hankelflow/heat_series.hpp"
#include "hankelflow/nondim.hpp"
#include "hankelflow/spectral_vorticity.hpp"
#include "hankelflow/verify.hpp"

namespace py = pybind11;
using namespace hankelflow;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

py::array_t<double> grid_array(const std::vector<double>& values, const flow::Grid& g) {
  py::array_t<double> out({g.n_r, g.n_z});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

hankel::RadialProfile profile(const py::object& f, double xi0) {
  if (py::isinstance<py::tuple>(f) || py::isinstance<py::list>(f)) {
    auto pair = f.cast<std::pair<std::vector<double>, std::vector<double>>>();
    return hankel::RadialProfile::sampled(std::move(pair.first), std::move(pair.second));
  }
  auto fn = f.cast<std::function<double(double)>>();
  return hankel::RadialProfile::analytic(std::move(fn), xi0);
}

struct Snapshot {
  flow::FlowFieldSnapshot s;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Hankel transform, heat series and spectral vorticity solver";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);
  py::register_exception<RankDeficiencyError>(m, "RankDeficiencyError", PyExc_ValueError);
  py::register_exception<DegenerateSourceError>(m, "DegenerateSourceError", PyExc_ValueError);

  m.def("j_three_half", &bessel::j_three_half, py::arg("x"));
  m.def("j_three_half_prime", &bessel::j_three_half_prime, py::arg("x"));
  m.def("tan_root", &bessel::tan_root, py::arg("k"));

  py::class_<bessel::RootTable>(m, "RootTable")
      .def_property_readonly("xi0", &bessel::RootTable::xi0)
      .def_property_readonly("roots", [](const bessel::RootTable& t) { return to_vector(t.roots()); })
      .def_property_readonly("deriv_at_root",
                             [](const bessel::RootTable& t) { return to_vector(t.deriv_at_root()); })
      .def("norm", &bessel::RootTable::norm, py::arg("n"))
      .def("truncated", &bessel::RootTable::truncated, py::arg("count"))
      .def("__len__", &bessel::RootTable::size);
  m.def("find_roots", &bessel::find_roots, py::arg("xi0"), py::arg("count"));

  py::class_<hankel::SpectralCoeffs>(m, "SpectralCoeffs")
      .def(py::init<bessel::RootTable, std::vector<double>>(), py::arg("roots"), py::arg("values"))
      .def_readonly("roots", &hankel::SpectralCoeffs::roots)
      .def_readonly("values", &hankel::SpectralCoeffs::values);
  m.def(
      "forward",
      [](const py::object& f, const bessel::RootTable& roots, double quad_tol) {
        return hankel::forward(profile(f, roots.xi0()), roots, quad_tol);
      },
      py::arg("f"), py::arg("roots"), py::arg("quad_tol") = hankel::kDefaultQuadTol,
      "f is a callable on [0, xi0] or a pair (xi, values) starting at xi = 0.");
  m.def(
      "inverse", [](const hankel::SpectralCoeffs& c, double xi) { return hankel::inverse(c, xi).value; },
      py::arg("coeffs"), py::arg("xi"));

  py::class_<heat_series::HeatSolution>(m, "HeatSolution")
      .def_property_readonly("coeffs",
                             [](const heat_series::HeatSolution& s) { return to_vector(s.evolved.poly().coeffs()); })
      .def_readonly("t", &heat_series::HeatSolution::t);
  m.def(
      "evolve",
      [](std::vector<double> xi_t0, double xi0, double t) {
        return heat_series::evolve(heat_series::RadialPolynomial(std::move(xi_t0), xi0), t);
      },
      py::arg("xi_t0"), py::arg("xi0"), py::arg("t"),
      "xi_t0 holds the coefficients of xi * T0 in powers of xi.");
  m.def("temperature", &heat_series::temperature, py::arg("solution"), py::arg("xi"));
  m.def("t_hat_derivative", &heat_series::t_hat_derivative, py::arg("solution"), py::arg("xi"));

  py::class_<spectral::ModeState>(m, "ModeState")
      .def(py::init([](std::size_t index, double mu, double phi0, double prandtl, double rayleigh) {
             return spectral::ModeState{index, mu, phi0, prandtl, rayleigh};
           }),
           py::arg("root_index"), py::arg("mu"), py::arg("phi0"), py::arg("prandtl"),
           py::arg("rayleigh") = 0.0)
      .def_readonly("root_index", &spectral::ModeState::root_index)
      .def_readonly("mu", &spectral::ModeState::mu)
      .def_readonly("phi0", &spectral::ModeState::phi0)
      .def_readonly("prandtl", &spectral::ModeState::prandtl);
  m.def(
      "phi_bar",
      [](const spectral::ModeState& mode, const py::object& forcing, double t) {
        if (forcing.is_none()) return spectral::phi_bar(mode, Polynomial{}, t);
        if (PyCallable_Check(forcing.ptr())) {
          return spectral::phi_bar(mode, forcing.cast<std::function<double(double)>>(), t);
        }
        return spectral::phi_bar(mode, Polynomial(forcing.cast<std::vector<double>>()), t);
      },
      py::arg("mode"), py::arg("forcing"), py::arg("t"),
      "forcing is None, polynomial coefficients in t, or a callable of t.");

  py::class_<spectral::SpectralModel>(m, "SpectralModel")
      .def(py::init([](const bessel::RootTable& roots, std::vector<double> xi_t0, const py::object& omega0,
                       double prandtl, double rayleigh) {
             return spectral::SpectralModel::from_profiles(
                 roots, heat_series::RadialPolynomial(std::move(xi_t0), roots.xi0()),
                 profile(omega0, roots.xi0()), prandtl, rayleigh);
           }),
           py::arg("roots"), py::arg("xi_t0"), py::arg("omega0"), py::arg("prandtl"),
           py::arg("rayleigh"))
      .def_property_readonly("phi0", &spectral::SpectralModel::phi0)
      .def_property_readonly("prandtl", &spectral::SpectralModel::prandtl)
      .def_property_readonly("rayleigh", &spectral::SpectralModel::rayleigh)
      .def("mode", &spectral::SpectralModel::mode, py::arg("n"))
      .def(
          "coefficients",
          [](const spectral::SpectralModel& model, double t) { return model.vorticity(t).coeffs; },
          py::arg("t"))
      .def("heat", &spectral::SpectralModel::heat, py::arg("t"));

  m.def(
      "mode_integral",
      [](const spectral::SpectralModel& model, double t, double xi) {
        return flow::mode_integral(model.vorticity(t), xi);
      },
      py::arg("model"), py::arg("t"), py::arg("xi"));
  m.def(
      "velocity",
      [](const spectral::SpectralModel& model, double t, double r, double z) {
        const auto v = flow::velocity(model.vorticity(t), r, z);
        return py::make_tuple(v.u, v.v);
      },
      py::arg("model"), py::arg("t"), py::arg("r"), py::arg("z"));

  py::class_<Snapshot>(m, "Snapshot")
      .def_property_readonly("t", [](const Snapshot& s) { return s.s.t; })
      .def_property_readonly("r", [](const Snapshot& s) {
        std::vector<double> r(s.s.grid.n_r);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s.s.grid.r(i);
        return r;
      })
      .def_property_readonly("z", [](const Snapshot& s) {
        std::vector<double> z(s.s.grid.n_z);
        for (std::size_t j = 0; j < z.size(); ++j) z[j] = s.s.grid.z(j);
        return z;
      })
      .def_property_readonly("u", [](const Snapshot& s) { return grid_array(s.s.u, s.s.grid); })
      .def_property_readonly("v", [](const Snapshot& s) { return grid_array(s.s.v, s.s.grid); })
      .def_property_readonly("omega", [](const Snapshot& s) { return grid_array(s.s.omega, s.s.grid); })
      .def_property_readonly("temperature",
                             [](const Snapshot& s) { return grid_array(s.s.temperature, s.s.grid); })
      .def_property_readonly("valid", [](const Snapshot& s) {
        py::array_t<bool> out({s.s.grid.n_r, s.s.grid.n_z});
        std::copy(s.s.valid.begin(), s.s.valid.end(), out.mutable_data());
        return out;
      });
  m.def(
      "snapshot",
      [](const spectral::SpectralModel& model, double t, std::size_t n_r, std::size_t n_z,
         double r_max, double z_max) {
        return Snapshot{flow::snapshot(model, flow::Grid{n_r, n_z, r_max, z_max}, t)};
      },
      py::arg("model"), py::arg("t"), py::arg("n_r"), py::arg("n_z"), py::arg("r_max"),
      py::arg("z_max"));

  py::class_<nondim::PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double nu, double kappa, double g, double alpha, double d, double H,
                       double rho, double c, double T1, double T2) {
             return nondim::PhysicalParams{nu, kappa, g, alpha, d, H, rho, c, T1, T2};
           }),
           py::arg("nu"), py::arg("kappa"), py::arg("g"), py::arg("alpha"), py::arg("d"),
           py::arg("H"), py::arg("rho"), py::arg("c"), py::arg("T1") = 0.0, py::arg("T2") = 0.0);
  py::class_<nondim::DimensionlessParams>(m, "DimensionlessParams")
      .def_readonly("prandtl", &nondim::DimensionlessParams::prandtl)
      .def_readonly("rayleigh", &nondim::DimensionlessParams::rayleigh)
      .def_readonly("t_tilde", &nondim::DimensionlessParams::t_tilde)
      .def_readonly("gamma", &nondim::DimensionlessParams::gamma)
      .def_readonly("time_scale", &nondim::DimensionlessParams::time_scale)
      .def_readonly("length_scale", &nondim::DimensionlessParams::length_scale)
      .def_readonly("temperature_scale", &nondim::DimensionlessParams::temperature_scale);
  m.def("derive", &nondim::derive, py::arg("params"));

  m.def(
      "check_roots",
      [](double xi0, std::size_t count) {
        const auto r = verify::check_roots(xi0, count);
        return py::dict(py::arg("max_abs") = r.max_abs, py::arg("pass") = r.pass);
      },
      py::arg("xi0"), py::arg("count"));
  m.def(
      "check_orthogonality",
      [](double xi0, std::size_t count) {
        const auto r = verify::check_orthogonality(xi0, count);
        return py::dict(py::arg("max_off_diagonal") = r.max_abs,
                        py::arg("max_rel_diagonal") = r.l2, py::arg("pass") = r.pass);
      },
      py::arg("xi0"), py::arg("count"));
  m.def("roundtrip_error", &verify::roundtrip_error, py::arg("xi0"), py::arg("modes"));
}
