#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "beamtf/numeric_policy.hpp"

namespace beamtf {

using cd = std::complex<double>;

/// Physical description of a simply supported prismatic beam carrying a
/// spring-mass-damper attachment at ell0 and a sensor at ellk. SI units.
struct BeamParams {
  double ell = 0.0;      ///< length [m]
  double ell0 = 0.0;     ///< attachment / actuator position [m]
  double ellk = 0.0;     ///< sensor position [m]
  double rho0 = 0.0;     ///< density [kg/m^3]
  double A = 0.0;        ///< cross-section area [m^2]
  double E = 0.0;        ///< Young's modulus [Pa]
  double G = 0.0;        ///< shear modulus [Pa]
  double I = 0.0;        ///< second moment of area [m^4]
  double k_shear = 5.0 / 6.0;  ///< shear correction factor (rectangle: 5/6)
  double m_att = 0.0;    ///< attached mass [kg]
  double kappa = 0.0;    ///< attachment spring stiffness [N/m]
  double d = 0.0;        ///< local viscous damping [N s/m]
};

/// Section and stiffness constants derived from BeamParams.
struct DerivedParams {
  double rho = 0.0;    ///< linear density rho0*A [kg/m]
  double I_rho = 0.0;  ///< rotary inertia rho0*I [kg m]
  double K = 0.0;      ///< shear rigidity k*G*A [N]
  double EI = 0.0;     ///< bending stiffness [N m^2]
};

enum class OutputKind { Displacement, Curvature };
enum class ModelKind { Timoshenko, EulerBernoulli };

std::string_view to_string(OutputKind kind) noexcept;
std::string_view to_string(ModelKind kind) noexcept;

struct Violation {
  std::string field;
  std::string message;
};

/// Every violated invariant, one entry per offending field. Empty iff valid.
std::vector<Violation> validate(const BeamParams& p);

DerivedParams derive_params(const BeamParams& p);

/// Aluminium test beam with shaker attachment (1.905 m span, attachment at
/// 1.4 m, colocated sensor, d = 0.025 N s/m).
BeamParams reference_params();

/// Laplace variable on the imaginary axis, s = 2*pi*i*nu.
inline cd laplace_at_hz(double nu_hz) {
  return {0.0, 2.0 * std::numbers::pi * nu_hz};
}

/// Throws DegenerateFrequency when |s| is below the policy floor.
void check_frequency(cd s, const NumericPolicy& policy);

/// Attachment impedance m s^2 + d s + kappa.
inline cd attachment_impedance(const BeamParams& p, cd s) {
  return p.m_att * s * s + p.d * s + p.kappa;
}

}  // namespace beamtf
