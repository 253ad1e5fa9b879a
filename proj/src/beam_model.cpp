#include "beamtf/beam_model.hpp"

#include <cmath>
#include <sstream>

#include "beamtf/errors.hpp"

namespace beamtf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateFrequency: return "DegenerateFrequency";
    case ErrorKind::RepeatedRoot: return "RepeatedRoot";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NearSingular: return "NearSingular";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::SingularDiscretization: return "SingularDiscretization";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(OutputKind kind) noexcept {
  return kind == OutputKind::Displacement ? "displacement" : "curvature";
}

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::Timoshenko ? "timoshenko" : "euler";
}

namespace {

void require_positive(std::vector<Violation>& out, const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << " must be finite and > 0 (got " << v << ")";
    out.push_back({name, msg.str()});
  }
}

}  // namespace

std::vector<Violation> validate(const BeamParams& p) {
  std::vector<Violation> out;
  require_positive(out, "ell", p.ell);
  require_positive(out, "rho0", p.rho0);
  require_positive(out, "A", p.A);
  require_positive(out, "E", p.E);
  require_positive(out, "G", p.G);
  require_positive(out, "I", p.I);
  require_positive(out, "k_shear", p.k_shear);
  require_positive(out, "m_att", p.m_att);
  require_positive(out, "kappa", p.kappa);
  if (!(p.d >= 0.0) || !std::isfinite(p.d)) {
    std::ostringstream msg;
    msg << "d must be finite and >= 0 (got " << p.d << ")";
    out.push_back({"d", msg.str()});
  }
  if (!(p.ell0 > 0.0 && p.ell0 < p.ell)) {
    std::ostringstream msg;
    msg << "ell0 must lie strictly inside (0, ell) (got " << p.ell0 << ")";
    out.push_back({"ell0", msg.str()});
  }
  if (!(p.ellk >= 0.0 && p.ellk <= p.ell)) {
    std::ostringstream msg;
    msg << "ellk must lie in [0, ell] (got " << p.ellk << ")";
    out.push_back({"ellk", msg.str()});
  }
  return out;
}

DerivedParams derive_params(const BeamParams& p) {
  return DerivedParams{
      .rho = p.rho0 * p.A,
      .I_rho = p.rho0 * p.I,
      .K = p.k_shear * p.G * p.A,
      .EI = p.E * p.I,
  };
}

BeamParams reference_params() {
  BeamParams p;
  p.ell = 1.905;
  p.ell0 = 1.4;
  p.ellk = 1.4;
  p.rho0 = 2700.0;
  p.A = 2.25e-4;
  p.E = 69e9;
  p.G = 25.5e9;
  p.I = 1.6875e-10;
  p.k_shear = 5.0 / 6.0;
  p.m_att = 0.1;
  p.kappa = 7000.0;
  p.d = 0.025;
  return p;
}

void check_frequency(cd s, const NumericPolicy& policy) {
  const double floor = 2.0 * std::numbers::pi * policy.min_frequency_hz;
  if (!(std::abs(s) >= floor)) {
    std::ostringstream msg;
    msg << "|s| = " << std::abs(s) << " is below the frequency floor "
        << policy.min_frequency_hz << " Hz";
    throw Error(ErrorKind::DegenerateFrequency, msg.str());
  }
}

}  // namespace beamtf
