#include "beamtf/timoshenko.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beamtf/errors.hpp"

namespace beamtf {

TbWavenumbers tb_coeffs(const DerivedParams& dp, cd s,
                        const NumericPolicy& policy) {
  check_frequency(s, policy);
  const cd s2 = s * s;
  const cd a = 0.5 * s2 * (dp.rho / dp.K + dp.I_rho / dp.EI);
  const cd b = (dp.K + dp.I_rho * s2) * dp.rho * s2 / (dp.K * dp.EI);
  const cd disc = a * a - b;
  const double scale = std::max(std::norm(a), std::abs(b));
  if (std::abs(disc) < policy.repeated_root_tol * scale) {
    std::ostringstream msg;
    msg << "repeated characteristic root at s = " << s;
    throw Error(ErrorKind::RepeatedRoot, msg.str());
  }
  const cd q = std::sqrt(disc);
  // Form the larger of a +- q directly and recover the other from Vieta,
  // which avoids cancellation when |a| dominates |q|.
  cd p1 = a + q;
  cd p2 = a - q;
  if (std::abs(p1) >= std::abs(p2)) {
    p2 = b / p1;
  } else {
    p1 = b / p2;
  }
  return {a, b, std::sqrt(p1), std::sqrt(p2)};
}

ResolvedTbWavenumbers tb_resolve_coeffs(const DerivedParams& dp, cd s,
                                        const NumericPolicy& policy) {
  try {
    return {tb_coeffs(dp, s, policy), s, false};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RepeatedRoot) throw;
  }
  const cd nudged = s * (1.0 + policy.repeated_root_nudge);
  return {tb_coeffs(dp, nudged, policy), nudged, true};
}

ZKernel7 tb_z(double x, const TbWavenumbers& wn, const NumericPolicy& policy) {
  const ModalRoots r = wn.roots();
  const cd p1 = r.lambda_sq[0];
  const cd p2 = r.lambda_sq[1];
  const auto h1 = hyperbolic_pair(r.lambda[0], p1, x, policy);
  const auto h2 = hyperbolic_pair(r.lambda[1], p2, x, policy);
  return {
      .z1 = p1 * h2.c - p2 * h1.c,
      .z2 = p1 * h2.s - p2 * h1.s,
      .z3 = cosh_difference(r, x, policy),
      .z4 = sinh_ratio_difference(r, x, policy),
      .z5 = p1 * h1.s - p2 * h2.s,
      .z6 = p1 * h1.c - p2 * h2.c,
      .z7 = p1 * p1 * h1.s - p2 * p2 * h2.s,
  };
}

Mat4 tb_companion(const TbWavenumbers& wn) {
  Mat4 a{};
  a[0][1] = a[1][2] = a[2][3] = 1.0;
  a[3][0] = -wn.b;
  a[3][2] = 2.0 * wn.a;
  return a;
}

Mat4 tb_expm(double x, const TbWavenumbers& wn, const NumericPolicy& policy) {
  const ModalRoots r = wn.roots();
  const cd ll = r.lambda_sq[0] * r.lambda_sq[1];
  const cd inv = 1.0 / (r.lambda_sq[0] - r.lambda_sq[1]);
  const ZKernel7 z = tb_z(x, wn, policy);
  Mat4 e{{
      {z.z1, z.z2, z.z3, z.z4},
      {-ll * z.z4, z.z1, z.z5, z.z3},
      {-ll * z.z3, -ll * z.z4, z.z6, z.z5},
      {-ll * z.z5, -ll * z.z3, z.z7, z.z6},
  }};
  for (auto& row : e)
    for (auto& v : row) v *= inv;
  return e;
}

TbAux tb_aux(const DerivedParams& dp, const BeamParams& p, cd s) {
  const cd s2 = s * s;
  const cd shear = dp.K + dp.I_rho * s2;
  if (std::abs(shear) <= 1e-14 * dp.K) {
    throw Error(ErrorKind::NearSingular,
                "K + I_rho s^2 vanishes (shear cut-off pole of u)");
  }
  return {
      .u = dp.EI / shear,
      .v = dp.K / dp.EI - dp.rho * s2 / dp.K,
      .v1 = dp.rho * s2 / dp.K,
      .v2 = attachment_impedance(p, s) / dp.K,
  };
}

InterfaceSystem tb_interface_matrix(const DerivedParams& dp,
                                    const BeamParams& p, cd s,
                                    const NumericPolicy& policy) {
  const TbWavenumbers wn = tb_coeffs(dp, s, policy);
  const TbAux aux = tb_aux(dp, p, s);
  const ModalRoots r = wn.roots();
  const cd ll = r.lambda_sq[0] * r.lambda_sq[1];
  const ZKernel7 L = tb_z(p.ell0, wn, policy);
  const ZKernel7 R = tb_z(p.ell0 - p.ell, wn, policy);
  const cd v = aux.v, v1 = aux.v1, v2 = aux.v2;

  InterfaceSystem sys;
  sys.M = {{
      {L.z2, L.z4, -R.z2, -R.z4},
      {v * L.z1 - ll * L.z3, v * L.z3 + L.z6, ll * R.z3 - v * R.z1,
       -R.z6 - v * R.z3},
      {v1 * L.z2 + ll * L.z4, v1 * L.z4 - L.z5, -ll * R.z4 - v1 * R.z2,
       R.z5 - v1 * R.z4},
      {L.z1 + v2 * L.z2, L.z3 + v2 * L.z4, -R.z1, -R.z3},
  }};
  sys.rhs_scale = (r.lambda_sq[0] - r.lambda_sq[1]) / dp.K;
  return sys;
}

BoundaryUnknowns tb_solve_boundary(const InterfaceSystem& sys, cd U) {
  return solve_interface(sys.M, sys.rhs_scale * U).x;
}

cd tb_transfer_direct(const DerivedParams& dp, const BeamParams& p, cd s,
                      double ellk, OutputKind kind,
                      const NumericPolicy& policy) {
  const TbWavenumbers wn = tb_coeffs(dp, s, policy);
  const InterfaceSystem sys = tb_interface_matrix(dp, p, s, policy);
  const BoundaryUnknowns x = tb_solve_boundary(sys, 1.0);
  // Fourth column of M^-1 from the solution of M x = rhs_scale e4.
  const Vec4 minv4{x.W1_0 / sys.rhs_scale, x.W3_0 / sys.rhs_scale,
                   x.W1_l / sys.rhs_scale, x.W3_l / sys.rhs_scale};
  const bool left = ellk <= p.ell0;
  const ZKernel7 z = tb_z(left ? ellk : ellk - p.ell, wn, policy);
  const cd c1 = left ? minv4[0] : minv4[2];
  const cd c2 = left ? minv4[1] : minv4[3];
  const double K = dp.K;
  if (kind == OutputKind::Displacement) {
    return (z.z2 * c1 + z.z4 * c2) / K;
  }
  const ModalRoots r = wn.roots();
  const cd ll = r.lambda_sq[0] * r.lambda_sq[1];
  const cd rs2 = dp.rho * s * s;
  return ((-ll * K * z.z4 - rs2 * z.z2) * c1 + (K * z.z5 - rs2 * z.z4) * c2) /
         (K * K);
}

BalancedSystem tb_balanced_system(const DerivedParams& dp, const BeamParams& p,
                                  cd s, const TbWavenumbers& wn,
                                  const NumericPolicy& policy, cd U) {
  const TbAux aux = tb_aux(dp, p, s);
  // Continuity of W, of psi/u = v W' + W''', of psi' = W'' - v1 W, and the
  // force balance divided by K.
  const InterfaceRows rows = [aux](const Jet4& w, Side side) -> Vec4 {
    const double sign = side == Side::Left ? 1.0 : -1.0;
    Vec4 r{
        sign * w[0],
        sign * (aux.v * w[1] + w[3]),
        sign * (w[2] - aux.v1 * w[0]),
        sign * w[1],
    };
    if (side == Side::Left) r[3] += aux.v2 * w[0];
    return r;
  };
  return build_balanced_system(wn.roots(), p.ell, p.ell0, rows,
                               Vec4{0.0, 0.0, 0.0, U / dp.K}, policy);
}

TbSolution tb_solve(const DerivedParams& dp, const BeamParams& p, cd s,
                    const NumericPolicy& policy) {
  const ResolvedTbWavenumbers res = tb_resolve_coeffs(dp, s, policy);
  const TbAux aux = tb_aux(dp, p, res.s);
  const BalancedSystem sys = tb_balanced_system(dp, p, res.s, res.wn, policy);
  BalancedSolve solved = solve_balanced(sys, policy);
  return {std::move(solved.field), res.wn, aux, res.s, solved.condition,
          res.perturbed};
}

cd tb_output(const TbSolution& sol, double ellk, OutputKind kind) {
  const Jet5 w = sol.field.jet(ellk);
  if (kind == OutputKind::Displacement) return w[0];
  return w[2] - sol.aux.v1 * w[0];
}

cd tb_transfer(const DerivedParams& dp, const BeamParams& p, cd s, double ellk,
               OutputKind kind, const NumericPolicy& policy) {
  return tb_output(tb_solve(dp, p, s, policy), ellk, kind);
}

}  // namespace beamtf
