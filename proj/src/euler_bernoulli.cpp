#include "beamtf/euler_bernoulli.hpp"

#include <cmath>

namespace beamtf {

EbWavenumber eb_gamma(const DerivedParams& dp, cd s,
                      const NumericPolicy& policy) {
  check_frequency(s, policy);
  const cd g4 = -dp.rho * s * s / dp.EI;
  return {std::sqrt(std::sqrt(g4))};
}

ZKernel4 eb_z(double x, const EbWavenumber& g, const NumericPolicy& policy) {
  const ModalRoots r = g.roots();
  const auto h1 = hyperbolic_pair(r.lambda[0], r.lambda_sq[0], x, policy);
  const auto h2 = hyperbolic_pair(r.lambda[1], r.lambda_sq[1], x, policy);
  const cd g2 = r.lambda_sq[0];
  return {
      .z1 = h1.c + h2.c,
      .z2 = h1.s + h2.s,
      .z3 = cosh_difference(r, x, policy) / g2,
      .z4 = sinh_ratio_difference(r, x, policy) / g2,
  };
}

Mat4 eb_companion(const EbWavenumber& g) {
  Mat4 a{};
  a[0][1] = a[1][2] = a[2][3] = 1.0;
  const cd g2 = g.gamma * g.gamma;
  a[3][0] = g2 * g2;
  return a;
}

Mat4 eb_expm(double x, const EbWavenumber& g, const NumericPolicy& policy) {
  const ZKernel4 z = eb_z(x, g, policy);
  const cd g2 = g.gamma * g.gamma;
  const cd g4 = g2 * g2;
  Mat4 e{{
      {z.z1, z.z2, z.z3, z.z4},
      {g4 * z.z4, z.z1, z.z2, z.z3},
      {g4 * z.z3, g4 * z.z4, z.z1, z.z2},
      {g4 * z.z2, g4 * z.z3, g4 * z.z4, z.z1},
  }};
  for (auto& row : e)
    for (auto& v : row) v *= 0.5;
  return e;
}

EbInterfaceSystem eb_interface_matrix(const DerivedParams& dp,
                                      const BeamParams& p, cd s,
                                      const NumericPolicy& policy) {
  const EbWavenumber g = eb_gamma(dp, s, policy);
  const cd g2 = g.gamma * g.gamma;
  const cd g4 = g2 * g2;
  const ZKernel4 L = eb_z(p.ell0, g, policy);
  const ZKernel4 R = eb_z(p.ell0 - p.ell, g, policy);
  const cd vt = attachment_impedance(p, s) / dp.EI;

  EbInterfaceSystem sys;
  sys.Mt = {{
      {L.z2, L.z4, -R.z2, -R.z4},
      {L.z1, L.z3, -R.z1, -R.z3},
      {g4 * L.z4, L.z2, -g4 * R.z4, -R.z2},
      {vt * L.z2 - g4 * L.z3, vt * L.z4 - L.z1, g4 * R.z3, R.z1},
  }};
  sys.rhs_scale = 2.0 / dp.EI;
  sys.vt = vt;
  return sys;
}

BoundaryUnknowns eb_solve_boundary(const EbInterfaceSystem& sys, cd U) {
  return solve_interface(sys.Mt, sys.rhs_scale * U).x;
}

cd eb_transfer_direct(const DerivedParams& dp, const BeamParams& p, cd s,
                      double ellk, OutputKind kind,
                      const NumericPolicy& policy) {
  const EbWavenumber g = eb_gamma(dp, s, policy);
  const EbInterfaceSystem sys = eb_interface_matrix(dp, p, s, policy);
  const BoundaryUnknowns x = eb_solve_boundary(sys, 1.0);
  const Vec4 minv4{x.W1_0 / sys.rhs_scale, x.W3_0 / sys.rhs_scale,
                   x.W1_l / sys.rhs_scale, x.W3_l / sys.rhs_scale};
  const bool left = ellk <= p.ell0;
  const ZKernel4 z = eb_z(left ? ellk : ellk - p.ell, g, policy);
  const cd c1 = left ? minv4[0] : minv4[2];
  const cd c2 = left ? minv4[1] : minv4[3];
  if (kind == OutputKind::Displacement) {
    return (z.z2 * c1 + z.z4 * c2) / dp.EI;
  }
  const cd g2 = g.gamma * g.gamma;
  return (g2 * g2 * z.z4 * c1 + z.z2 * c2) / dp.EI;
}

BalancedSystem eb_balanced_system(const DerivedParams& dp, const BeamParams& p,
                                  cd s, const EbWavenumber& g,
                                  const NumericPolicy& policy, cd U) {
  const cd vt = attachment_impedance(p, s) / dp.EI;
  // Continuity of W, W', W'' and the force balance divided by EI.
  const InterfaceRows rows = [vt](const Jet4& w, Side side) -> Vec4 {
    if (side == Side::Left) return {w[0], w[1], w[2], vt * w[0] - w[3]};
    return {-w[0], -w[1], -w[2], w[3]};
  };
  return build_balanced_system(g.roots(), p.ell, p.ell0, rows,
                               Vec4{0.0, 0.0, 0.0, U / dp.EI}, policy);
}

EbSolution eb_solve(const DerivedParams& dp, const BeamParams& p, cd s,
                    const NumericPolicy& policy) {
  const EbWavenumber g = eb_gamma(dp, s, policy);
  const BalancedSystem sys = eb_balanced_system(dp, p, s, g, policy);
  BalancedSolve solved = solve_balanced(sys, policy);
  return {std::move(solved.field), g, attachment_impedance(p, s) / dp.EI, s,
          solved.condition};
}

cd eb_output(const EbSolution& sol, double ellk, OutputKind kind) {
  const Jet5 w = sol.field.jet(ellk);
  return kind == OutputKind::Displacement ? w[0] : w[2];
}

cd eb_transfer(const DerivedParams& dp, const BeamParams& p, cd s, double ellk,
               OutputKind kind, const NumericPolicy& policy) {
  return eb_output(eb_solve(dp, p, s, policy), ellk, kind);
}

}  // namespace beamtf
