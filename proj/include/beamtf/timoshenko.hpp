#pragma once

#include "beamtf/beam_model.hpp"
#include "beamtf/complex_linalg.hpp"
#include "beamtf/interface_system.hpp"
#include "beamtf/modal.hpp"
#include "beamtf/numeric_policy.hpp"

namespace beamtf {

/// Coefficients of the Laplace-domain Timoshenko ODE
///   W'''' - 2a W'' + b W = 0
/// and its characteristic roots lambda1,2 = sqrt(a +- sqrt(a^2 - b))
/// (principal branches throughout).
struct TbWavenumbers {
  cd a;
  cd b;
  cd lambda1;
  cd lambda2;

  ModalRoots roots() const {
    return {{lambda1, lambda2}, {lambda1 * lambda1, lambda2 * lambda2}};
  }
};

/// Entries of (lambda1^2 - lambda2^2) e^{x A}; see tb_expm for the layout.
struct ZKernel7 {
  cd z1, z2, z3, z4, z5, z6, z7;
};

/// Frequency-dependent scalars of the interface conditions.
struct TbAux {
  cd u;   ///< EI / (K + I_rho s^2)
  cd v;   ///< K/EI - rho s^2/K
  cd v1;  ///< rho s^2 / K
  cd v2;  ///< (m s^2 + d s + kappa) / K
};

/// The interface system exactly as assembled from the kernels; the right
/// hand side is (0, 0, 0, rhs_scale * U).
struct InterfaceSystem {
  Mat4 M{};
  cd rhs_scale;  ///< (lambda1^2 - lambda2^2) / K
};

/// Throws DegenerateFrequency below the floor and RepeatedRoot when
/// lambda1^2 and lambda2^2 coincide within policy tolerance.
TbWavenumbers tb_coeffs(const DerivedParams& dp, cd s,
                        const NumericPolicy& policy = {});

struct ResolvedTbWavenumbers {
  TbWavenumbers wn;
  cd s;            ///< frequency actually used
  bool perturbed;  ///< true if s was nudged off a repeated root
};

/// tb_coeffs with the repeated-root fallback: s -> s (1 + nudge), once.
ResolvedTbWavenumbers tb_resolve_coeffs(const DerivedParams& dp, cd s,
                                        const NumericPolicy& policy = {});

/// The seven kernels at signed position x (negative x is used for the right
/// segment, measured from ell).
ZKernel7 tb_z(double x, const TbWavenumbers& wn,
              const NumericPolicy& policy = {});

/// Companion matrix A of the first-order system for (W, W', W'', W''').
Mat4 tb_companion(const TbWavenumbers& wn);

/// Closed-form e^{x A}.
Mat4 tb_expm(double x, const TbWavenumbers& wn,
             const NumericPolicy& policy = {});

TbAux tb_aux(const DerivedParams& dp, const BeamParams& p, cd s);

/// Interface matrix M entry for entry from the kernels at ell0 and ell0-ell.
InterfaceSystem tb_interface_matrix(const DerivedParams& dp,
                                    const BeamParams& p, cd s,
                                    const NumericPolicy& policy = {});

/// Direct pivoted solve of the interface system for input U.
BoundaryUnknowns tb_solve_boundary(const InterfaceSystem& sys, cd U);

/// Transfer function through the direct route: interface matrix, one solve
/// and the kernel formulas at ellk. Loses roughly
/// log10(exp(|Re lambda1| ellk)) digits, so use it for cross-checks at low
/// frequency; tb_transfer is the production path.
cd tb_transfer_direct(const DerivedParams& dp, const BeamParams& p, cd s,
                      double ellk, OutputKind kind,
                      const NumericPolicy& policy = {});

// --- balanced modal route ---------------------------------------------------

/// The same interface conditions in the scaled modal basis, for input U.
BalancedSystem tb_balanced_system(const DerivedParams& dp, const BeamParams& p,
                                  cd s, const TbWavenumbers& wn,
                                  const NumericPolicy& policy = {},
                                  cd U = 1.0);

struct TbSolution {
  ModalField field;
  TbWavenumbers wn;
  TbAux aux;
  cd s;
  double condition;
  bool perturbed;
};

/// Unit-input (U = 1) solution of the attached-beam problem.
TbSolution tb_solve(const DerivedParams& dp, const BeamParams& p, cd s,
                    const NumericPolicy& policy = {});

/// Displacement W(ellk) or curvature psi'(ellk) = W''(ellk) - v1 W(ellk).
cd tb_output(const TbSolution& sol, double ellk, OutputKind kind);

/// H1 (Displacement) or H2 (Curvature) at s for unit input.
cd tb_transfer(const DerivedParams& dp, const BeamParams& p, cd s, double ellk,
               OutputKind kind, const NumericPolicy& policy = {});

}  // namespace beamtf
