#pragma once

#include "beamtf/beam_model.hpp"
#include "beamtf/complex_linalg.hpp"
#include "beamtf/interface_system.hpp"
#include "beamtf/modal.hpp"
#include "beamtf/numeric_policy.hpp"

namespace beamtf {

/// gamma = principal fourth root of -rho s^2 / EI, arg in (-pi/4, pi/4].
struct EbWavenumber {
  cd gamma;

  /// The Euler-Bernoulli operator as a modal pair: l1 = gamma, l2 = i gamma.
  ModalRoots roots() const {
    const cd g2 = gamma * gamma;
    return {{gamma, cd{0.0, 1.0} * gamma}, {g2, -g2}};
  }
};

/// Entries of 2 e^{x A}; see eb_expm for the layout.
struct ZKernel4 {
  cd z1, z2, z3, z4;
};

struct EbInterfaceSystem {
  Mat4 Mt{};
  cd rhs_scale;  ///< 2 / EI
  cd vt;         ///< (m s^2 + d s + kappa) / EI
};

/// Throws DegenerateFrequency below the floor.
EbWavenumber eb_gamma(const DerivedParams& dp, cd s,
                      const NumericPolicy& policy = {});

ZKernel4 eb_z(double x, const EbWavenumber& g,
              const NumericPolicy& policy = {});

/// Companion matrix with gamma^4 = -rho s^2 / EI in the corner.
Mat4 eb_companion(const EbWavenumber& g);

Mat4 eb_expm(double x, const EbWavenumber& g,
             const NumericPolicy& policy = {});

EbInterfaceSystem eb_interface_matrix(const DerivedParams& dp,
                                      const BeamParams& p, cd s,
                                      const NumericPolicy& policy = {});

BoundaryUnknowns eb_solve_boundary(const EbInterfaceSystem& sys, cd U);

/// Direct route through the printed matrix; see tb_transfer_direct.
cd eb_transfer_direct(const DerivedParams& dp, const BeamParams& p, cd s,
                      double ellk, OutputKind kind,
                      const NumericPolicy& policy = {});

BalancedSystem eb_balanced_system(const DerivedParams& dp, const BeamParams& p,
                                  cd s, const EbWavenumber& g,
                                  const NumericPolicy& policy = {},
                                  cd U = 1.0);

struct EbSolution {
  ModalField field;
  EbWavenumber g;
  cd vt;
  cd s;
  double condition;
};

EbSolution eb_solve(const DerivedParams& dp, const BeamParams& p, cd s,
                    const NumericPolicy& policy = {});

/// Displacement W(ellk) or curvature W''(ellk).
cd eb_output(const EbSolution& sol, double ellk, OutputKind kind);

cd eb_transfer(const DerivedParams& dp, const BeamParams& p, cd s, double ellk,
               OutputKind kind, const NumericPolicy& policy = {});

}  // namespace beamtf
