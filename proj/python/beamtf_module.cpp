#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beamtf/beam_model.hpp"
#include "beamtf/errors.hpp"
#include "beamtf/euler_bernoulli.hpp"
#include "beamtf/response.hpp"
#include "beamtf/timoshenko.hpp"
#include "beamtf/transfer.hpp"
#include "beamtf/verification.hpp"

namespace py = pybind11;
using namespace beamtf;

namespace {

ModelKind model_of(const std::string& s) {
  if (s == "timoshenko") return ModelKind::Timoshenko;
  if (s == "euler") return ModelKind::EulerBernoulli;
  throw py::value_error("model must be 'timoshenko' or 'euler'");
}

OutputKind output_of(const std::string& s) {
  if (s == "displacement") return OutputKind::Displacement;
  if (s == "curvature") return OutputKind::Curvature;
  throw py::value_error("output must be 'displacement' or 'curvature'");
}

}  // namespace

PYBIND11_MODULE(_beamtf, m) {
  m.doc() = "Exact frequency-domain transfer functions of a pinned beam";

  py::register_exception<Error>(m, "BeamError");

  py::class_<BeamParams>(m, "BeamParams")
      .def(py::init<>())
      .def_readwrite("ell", &BeamParams::ell)
      .def_readwrite("ell0", &BeamParams::ell0)
      .def_readwrite("ellk", &BeamParams::ellk)
      .def_readwrite("rho0", &BeamParams::rho0)
      .def_readwrite("A", &BeamParams::A)
      .def_readwrite("E", &BeamParams::E)
      .def_readwrite("G", &BeamParams::G)
      .def_readwrite("I", &BeamParams::I)
      .def_readwrite("k_shear", &BeamParams::k_shear)
      .def_readwrite("m_att", &BeamParams::m_att)
      .def_readwrite("kappa", &BeamParams::kappa)
      .def_readwrite("d", &BeamParams::d);

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("rho", &DerivedParams::rho)
      .def_readonly("I_rho", &DerivedParams::I_rho)
      .def_readonly("K", &DerivedParams::K)
      .def_readonly("EI", &DerivedParams::EI);

  py::class_<TransferSample>(m, "TransferSample")
      .def_readonly("nu", &TransferSample::nu)
      .def_readonly("h", &TransferSample::h)
      .def_readonly("mag", &TransferSample::mag)
      .def_readonly("mag_db", &TransferSample::mag_db)
      .def_readonly("phase", &TransferSample::phase)
      .def_property_readonly("status", [](const TransferSample& s) {
        return std::string(to_string(s.status));
      });

  py::class_<ModalPeak>(m, "ModalPeak")
      .def_readonly("nu_peak", &ModalPeak::nu_peak)
      .def_readonly("mag_peak", &ModalPeak::mag_peak)
      .def_readonly("refined", &ModalPeak::refined);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("ode_residual", &ResidualReport::ode_residual)
      .def_readonly("bc_residual", &ResidualReport::bc_residual)
      .def_readonly("interface_residual", &ResidualReport::interface_residual)
      .def_readonly("samples", &ResidualReport::samples);

  m.def("reference_params", &reference_params);
  m.def("derive_params", &derive_params);
  m.def("validate", [](const BeamParams& p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : validate(p)) out.emplace_back(v.field, v.message);
    return out;
  });

  m.def("tb_coeffs", [](const BeamParams& p, cd s) {
    const TbWavenumbers wn = tb_coeffs(derive_params(p), s);
    return py::make_tuple(wn.a, wn.b, wn.lambda1, wn.lambda2);
  }, py::arg("params"), py::arg("s"));
  m.def("eb_gamma", [](const BeamParams& p, cd s) {
    return eb_gamma(derive_params(p), s).gamma;
  }, py::arg("params"), py::arg("s"));
  m.def("tb_expm", [](const BeamParams& p, cd s, double x) {
    return tb_expm(x, tb_coeffs(derive_params(p), s));
  }, py::arg("params"), py::arg("s"), py::arg("x"));
  m.def("eb_expm", [](const BeamParams& p, cd s, double x) {
    return eb_expm(x, eb_gamma(derive_params(p), s));
  }, py::arg("params"), py::arg("s"), py::arg("x"));
  m.def("expm_series_oracle", &expm_series_oracle, py::arg("companion"),
        py::arg("x"));

  m.def("transfer", [](const BeamParams& p, cd s, const std::string& model,
                       const std::string& output) {
    return transfer(model_of(model), p, derive_params(p), s, p.ellk,
                    output_of(output));
  }, py::arg("params"), py::arg("s"), py::arg("model") = "timoshenko",
     py::arg("output") = "displacement");
  m.def("transfer_at_hz", [](const BeamParams& p, double nu,
                             const std::string& model,
                             const std::string& output) {
    return transfer(model_of(model), p, derive_params(p), laplace_at_hz(nu),
                    p.ellk, output_of(output));
  }, py::arg("params"), py::arg("nu"), py::arg("model") = "timoshenko",
     py::arg("output") = "displacement");

  m.def("sweep", [](const BeamParams& p, double nu_min, double nu_max,
                    int points, const std::string& model,
                    const std::string& output, bool log_spacing) {
    SweepSpec spec{model_of(model), output_of(output), nu_min, nu_max, points,
                   log_spacing ? Spacing::Log : Spacing::Linear};
    py::gil_scoped_release release;
    return sweep(spec, p, derive_params(p), p.ellk);
  }, py::arg("params"), py::arg("nu_min"), py::arg("nu_max"),
     py::arg("points"), py::arg("model") = "timoshenko",
     py::arg("output") = "displacement", py::arg("log_spacing") = false);

  m.def("find_peaks", [](const BeamParams& p, double lo, double hi,
                         const std::string& model, const std::string& output,
                         int coarse_n) {
    py::gil_scoped_release release;
    return find_peaks(model_of(model), output_of(output), p, derive_params(p),
                      p.ellk, lo, hi, coarse_n);
  }, py::arg("params"), py::arg("nu_lo") = 1.0, py::arg("nu_hi") = 50.0,
     py::arg("model") = "timoshenko", py::arg("output") = "displacement",
     py::arg("coarse_n") = 5000);

  m.def("residual_check", [](const BeamParams& p, cd s,
                             const std::string& model) {
    return residual_check(model_of(model), p, derive_params(p), s, p.ellk);
  }, py::arg("params"), py::arg("s"), py::arg("model") = "timoshenko");
  m.def("h2_consistency", [](const BeamParams& p, cd s) {
    return h2_consistency(p, derive_params(p), s, p.ellk);
  }, py::arg("params"), py::arg("s"));
  m.def("fd_bvp_oracle", [](const BeamParams& p, cd s, const std::string& model,
                            const std::string& output, int n_nodes) {
    return fd_bvp_oracle(model_of(model), p, derive_params(p), s, p.ellk,
                         output_of(output), n_nodes);
  }, py::arg("params"), py::arg("s"), py::arg("model") = "timoshenko",
     py::arg("output") = "displacement", py::arg("n_nodes") = 4000);
}
