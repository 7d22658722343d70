#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammaecho/dynamics.hpp"
#include "gammaecho/echo.hpp"
#include "gammaecho/errors.hpp"
#include "gammaecho/overlap_op.hpp"
#include "gammaecho/phase_space.hpp"

namespace py = pybind11;
using namespace gammaecho;

namespace {

RealVector grid_axis(double lo, double hi, int n) {
  RealVector axis(n);
  for (int i = 0; i < n; ++i) axis(i) = lo + i * (hi - lo) / (n - 1);
  return axis;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gamma-oscillator Loschmidt echo and phase-space toolkit";

  py::class_<PureState>(m, "PureState")
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def_property_readonly("n_max", &PureState::n_max)
      .def("populations", &PureState::populations);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix>())
      .def_property_readonly("entries", &DensityMatrix::entries)
      .def_property_readonly("n_max", &DensityMatrix::n_max)
      .def("is_positive_semidefinite", &DensityMatrix::is_positive_semidefinite,
           py::arg("tol") = 1e-10);

  py::class_<NumberStats>(m, "NumberStats")
      .def_readonly("mean", &NumberStats::mean)
      .def_readonly("variance", &NumberStats::variance)
      .def_readonly("hs", &NumberStats::hs);

  py::class_<GammaParams>(m, "GammaParams")
      .def(py::init<>())
      .def_readwrite("omega", &GammaParams::omega)
      .def_readwrite("lam", &GammaParams::lam)
      .def_readwrite("gamma", &GammaParams::gamma)
      .def_readwrite("epsilon", &GammaParams::epsilon)
      .def_readwrite("hbar", &GammaParams::hbar)
      .def_readwrite("delta_scale", &GammaParams::delta_scale);

  py::class_<EchoSeries>(m, "EchoSeries")
      .def_readonly("times", &EchoSeries::times)
      .def_readonly("values", &EchoSeries::values)
      .def_readonly("cum_mean", &EchoSeries::cum_mean)
      .def_readonly("cum_var", &EchoSeries::cum_var);

  py::class_<PhaseSpaceGrid>(m, "PhaseSpaceGrid")
      .def(py::init<double, double, double, double, int, int>(), py::arg("q_min"),
           py::arg("q_max"), py::arg("p_min"), py::arg("p_max"), py::arg("n_q"),
           py::arg("n_p"))
      .def_static("symmetric", &PhaseSpaceGrid::symmetric, py::arg("half_width"),
                  py::arg("points"))
      .def_readonly("q_min", &PhaseSpaceGrid::q_min)
      .def_readonly("q_max", &PhaseSpaceGrid::q_max)
      .def_readonly("p_min", &PhaseSpaceGrid::p_min)
      .def_readonly("p_max", &PhaseSpaceGrid::p_max)
      .def_readonly("n_q", &PhaseSpaceGrid::n_q)
      .def_readonly("n_p", &PhaseSpaceGrid::n_p);

  py::class_<PhaseSpaceField>(m, "PhaseSpaceField")
      .def_readonly("grid", &PhaseSpaceField::grid)
      .def_readonly("values", &PhaseSpaceField::values)
      .def_property_readonly("q",
                             [](const PhaseSpaceField& f) {
                               return grid_axis(f.grid.q_min, f.grid.q_max, f.grid.n_q);
                             })
      .def_property_readonly("p",
                             [](const PhaseSpaceField& f) {
                               return grid_axis(f.grid.p_min, f.grid.p_max, f.grid.n_p);
                             })
      .def("integral", &PhaseSpaceField::integral)
      .def("max_abs", &PhaseSpaceField::max_abs);

  py::class_<OverlapOperator>(m, "OverlapOperator")
      .def_readonly("entries", &OverlapOperator::entries)
      .def_readonly("k_norm", &OverlapOperator::k_norm);

  // fock-basis states and statistics
  m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("n_max"));
  m.def("phase_state", &phase_state, py::arg("r"), py::arg("n_max"));
  m.def("fock_state", &fock_state, py::arg("n"), py::arg("n_max"));
  m.def("cat_state", &cat_state, py::arg("alpha"), py::arg("sign"), py::arg("n_max"));
  m.def("random_pure_state", &random_pure_state, py::arg("n_max"), py::arg("seed"));
  m.def("pure_state_from_amplitudes", &PureState::from_amplitudes, py::arg("amplitudes"));
  m.def("default_cutoff", &default_cutoff, py::arg("alpha"));
  m.def("to_density", &to_density, py::arg("psi"));
  m.def("number_stats", &number_stats, py::arg("rho"));
  m.def("purity", &purity, py::arg("rho"));
  m.def("split_diagonal",
        py::overload_cast<const ComplexMatrix&>(&split_diagonal), py::arg("op"));

  // dynamics
  m.def("spectrum",
        [](const GammaParams& params, int n_max) { return spectrum(params, n_max).energies; },
        py::arg("params"), py::arg("n_max"));
  m.def("evolve", &evolve, py::arg("rho0"), py::arg("params"), py::arg("t"));
  m.def("evolve_delta", &evolve_delta, py::arg("rho0"), py::arg("gamma"),
        py::arg("epsilon"), py::arg("delta_scale"), py::arg("t"));
  m.def("fundamental_period", &fundamental_period, py::arg("gamma"), py::arg("epsilon"),
        py::arg("delta_scale"));

  // loschmidt echo
  m.def("echo_pure", &echo_pure, py::arg("psi0"), py::arg("gamma"), py::arg("epsilon"),
        py::arg("delta_scale"), py::arg("t"));
  m.def("echo_general", &echo_general, py::arg("rho1"), py::arg("rho2"));
  m.def("echo_series", &echo_series, py::arg("psi0"), py::arg("gamma"),
        py::arg("epsilon"), py::arg("delta_scale"), py::arg("t_max"), py::arg("dt"),
        py::arg("fold_frequency") = 0.0);
  m.def("asymptotic_mean_oracle", &asymptotic_mean_oracle, py::arg("psi0"),
        py::arg("gamma"), py::arg("epsilon"));
  m.def("asymptotic_stats_oracle",
        [](const PureState& psi0, double gamma, double epsilon, double delta_scale,
           double fold_frequency) {
          const LongTimeStats s =
              asymptotic_stats_oracle(psi0, gamma, epsilon, delta_scale, fold_frequency);
          return std::make_pair(s.mean, s.variance);
        },
        py::arg("psi0"), py::arg("gamma"), py::arg("epsilon"), py::arg("delta_scale"),
        py::arg("fold_frequency") = 0.0);
  m.def("fit_saturation",
        [](const std::vector<double>& sigma, const std::vector<double>& mean) {
          if (sigma.size() != mean.size())
            throw DimensionMismatch("sigma and mean lengths differ");
          std::vector<SaturationPoint> pts;
          for (size_t i = 0; i < sigma.size(); ++i)
            pts.push_back({sigma[i], mean[i], ""});
          return fit_saturation(pts);
        },
        py::arg("sigma"), py::arg("mean"));

  m.def("window_mean", &window_mean, py::arg("series"));
  m.def("window_variance", &window_variance, py::arg("series"));
  m.def("fit_short_time_decay", &fit_short_time_decay, py::arg("series"));

  // phase space
  m.def("pi_mn", &pi_mn, py::arg("beta"), py::arg("m"), py::arg("n"));
  m.def("wigner", py::overload_cast<const ComplexMatrix&, const PhaseSpaceGrid&>(&wigner),
        py::arg("op"), py::arg("grid"));
  m.def("husimi", &husimi, py::arg("rho"), py::arg("grid"));
  m.def("roughness", &roughness, py::arg("rho"), py::arg("grid"));
  m.def("roughness_refined",
        [](const DensityMatrix& rho, const PhaseSpaceGrid& grid) {
          const RefinedRoughness r = roughness_refined(rho, grid);
          return std::make_tuple(r.coarse, r.fine, r.extrapolated);
        },
        py::arg("rho"), py::arg("grid"));
  m.def("grid_auto", &grid_auto, py::arg("rho"), py::arg("points") = 201);

  // overlap operator
  m.def("overlap_operator",
        py::overload_cast<const DensityMatrix&, const DensityMatrix&>(&overlap_operator),
        py::arg("rho0"), py::arg("rho_t"));
  m.def("wigner_overlap_components",
        [](const DensityMatrix& rho0, double gamma, double epsilon, double delta_scale,
           double t, const PhaseSpaceGrid& grid) {
          OverlapFieldSet s =
              wigner_overlap_components(rho0, gamma, epsilon, delta_scale, t, grid);
          return std::make_tuple(std::move(s.total), std::move(s.diagonal),
                                 std::move(s.nondiagonal));
        },
        py::arg("rho0"), py::arg("gamma"), py::arg("epsilon"), py::arg("delta_scale"),
        py::arg("t"), py::arg("grid"));
}
