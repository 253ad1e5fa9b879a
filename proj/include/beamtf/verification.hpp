#pragma once

#include "beamtf/beam_model.hpp"
#include "beamtf/complex_linalg.hpp"
#include "beamtf/euler_bernoulli.hpp"
#include "beamtf/numeric_policy.hpp"
#include "beamtf/timoshenko.hpp"

namespace beamtf {

/// Scaling and squaring with a truncated Taylor series in extended
/// precision. Independent of the closed-form kernels. Throws Overflow if the
/// result is not finite.
Mat4 expm_series_oracle(const Mat4& companion, double x);

/// max_ij |D (closed - oracle) D^-1| / max_ij |D oracle D^-1| where
/// D = diag(1, 1/sigma, 1/sigma^2, 1/sigma^3) and sigma bounds the root
/// moduli of the companion matrix. The similarity puts all four derivative
/// orders on one scale before the norms are taken.
double expm_oracle_deviation(const Mat4& closed, const Mat4& companion,
                             double x);

/// Second-order finite differences on [0, ell0] and [ell0, ell] with a
/// duplicated interface node; unit input. Throws SingularDiscretization.
cd fd_bvp_oracle(ModelKind model, const BeamParams& p, const DerivedParams& dp,
                 cd s, double ellk, OutputKind kind, int n_nodes);

struct ResidualReport {
  double ode_residual = 0.0;        ///< max |sum of ODE terms| / sum |terms|
  double bc_residual = 0.0;         ///< max end value / max |W|
  double interface_residual = 0.0;  ///< continuity relative, jump / |U|
  int samples = 0;

  double worst() const;
};

ResidualReport residual_check(const TbSolution& sol, const BeamParams& p,
                              const DerivedParams& dp, double ellk,
                              cd U = 1.0);
ResidualReport residual_check(const EbSolution& sol, const BeamParams& p,
                              const DerivedParams& dp, double ellk,
                              cd U = 1.0);
/// Solves at s for unit input and checks the result.
ResidualReport residual_check(ModelKind model, const BeamParams& p,
                              const DerivedParams& dp, cd s, double ellk,
                              const NumericPolicy& policy = {});

/// Relative deviation between H2 assembled from the fourth column of M^-1
/// and W''(ellk) - (rho s^2 / K) W(ellk) taken from the rows of
/// e^{ellk A} applied to the same end state. Both use the direct route, so
/// stay below about 30 Hz.
double h2_consistency(const BeamParams& p, const DerivedParams& dp, cd s,
                      double ellk, cd U = 1.0,
                      const NumericPolicy& policy = {});

}  // namespace beamtf
