#include "beamtf/verification.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace beamtf {

namespace {

// |sum of terms| / sum |terms|; zero when every term vanishes.
double relative_sum(std::initializer_list<cd> terms) {
  cd sum = 0.0;
  double mag = 0.0;
  for (const cd& t : terms) {
    sum += t;
    mag += std::abs(t);
  }
  return mag > 0.0 ? std::abs(sum) / mag : 0.0;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

std::vector<double> sample_points(const BeamParams& p, double ellk) {
  constexpr int kPerSegment = 20;
  std::vector<double> xs;
  for (int i = 0; i < kPerSegment; ++i) {
    const double t = (i + 0.5) / kPerSegment;
    xs.push_back(p.ell0 * t);
    xs.push_back(p.ell0 + (p.ell - p.ell0) * t);
  }
  xs.push_back(ellk);
  return xs;
}

struct EndValues {
  double w = 0.0;
  double w2 = 0.0;
};

// Boundary residual shared by both models: W and W'' at the pinned ends,
// each relative to its largest sampled magnitude.
double boundary_residual(const ModalField& f, const std::vector<double>& xs) {
  EndValues scale, ends;
  for (double x : xs) {
    const Jet5 j = f.jet(x);
    scale.w = std::max(scale.w, std::abs(j[0]));
    scale.w2 = std::max(scale.w2, std::abs(j[2]));
  }
  for (const Jet5& j : {f.jet(0.0, Side::Left), f.jet(f.ell(), Side::Right)}) {
    ends.w = std::max(ends.w, std::abs(j[0]));
    ends.w2 = std::max(ends.w2, std::abs(j[2]));
  }
  return std::max(ratio(ends.w, scale.w), ratio(ends.w2, scale.w2));
}

}  // namespace

double ResidualReport::worst() const {
  return std::max({ode_residual, bc_residual, interface_residual});
}

ResidualReport residual_check(const TbSolution& sol, const BeamParams& p,
                              const DerivedParams& dp, double ellk, cd U) {
  const ModalField& f = sol.field;
  const std::vector<double> xs = sample_points(p, ellk);
  ResidualReport r;
  r.samples = static_cast<int>(xs.size());
  for (double x : xs) {
    const Jet5 w = f.jet(x);
    r.ode_residual = std::max(
        r.ode_residual,
        relative_sum({w[4], -2.0 * sol.wn.a * w[2], sol.wn.b * w[0]}));
  }
  r.bc_residual = boundary_residual(f, xs);

  const Jet5 L = f.jet(p.ell0, Side::Left);
  const Jet5 R = f.jet(p.ell0, Side::Right);
  const TbAux& aux = sol.aux;
  const double cont = std::max({
      relative_sum({L[0], -R[0]}),
      relative_sum({aux.v * L[1], L[3], -aux.v * R[1], -R[3]}),
      relative_sum({L[2], -aux.v1 * L[0], -R[2], aux.v1 * R[0]}),
  });
  const cd Z = attachment_impedance(p, sol.s);
  const double jump =
      ratio(std::abs(dp.K * (L[1] - R[1]) + Z * L[0] - U), std::abs(U));
  r.interface_residual = std::max(cont, jump);
  return r;
}

ResidualReport residual_check(const EbSolution& sol, const BeamParams& p,
                              const DerivedParams& dp, double ellk, cd U) {
  const ModalField& f = sol.field;
  const std::vector<double> xs = sample_points(p, ellk);
  const cd g2 = sol.g.gamma * sol.g.gamma;
  ResidualReport r;
  r.samples = static_cast<int>(xs.size());
  for (double x : xs) {
    const Jet5 w = f.jet(x);
    r.ode_residual =
        std::max(r.ode_residual, relative_sum({w[4], -g2 * g2 * w[0]}));
  }
  r.bc_residual = boundary_residual(f, xs);

  const Jet5 L = f.jet(p.ell0, Side::Left);
  const Jet5 R = f.jet(p.ell0, Side::Right);
  const double cont = std::max({relative_sum({L[0], -R[0]}),
                                relative_sum({L[1], -R[1]}),
                                relative_sum({L[2], -R[2]})});
  const cd Z = attachment_impedance(p, sol.s);
  const double jump =
      ratio(std::abs(dp.EI * (L[3] - R[3]) + U - Z * L[0]), std::abs(U));
  r.interface_residual = std::max(cont, jump);
  return r;
}

ResidualReport residual_check(ModelKind model, const BeamParams& p,
                              const DerivedParams& dp, cd s, double ellk,
                              const NumericPolicy& policy) {
  if (model == ModelKind::Timoshenko) {
    return residual_check(tb_solve(dp, p, s, policy), p, dp, ellk);
  }
  return residual_check(eb_solve(dp, p, s, policy), p, dp, ellk);
}

double h2_consistency(const BeamParams& p, const DerivedParams& dp, cd s,
                      double ellk, cd U, const NumericPolicy& policy) {
  const TbWavenumbers wn = tb_coeffs(dp, s, policy);
  const InterfaceSystem sys = tb_interface_matrix(dp, p, s, policy);
  const BoundaryUnknowns b = tb_solve_boundary(sys, U);
  const bool left = ellk <= p.ell0;
  const double x = left ? ellk : ellk - p.ell;
  const cd w1 = left ? b.W1_0 : b.W1_l;
  const cd w3 = left ? b.W3_0 : b.W3_l;

  const Vec4 state = tb_expm(x, wn, policy) * Vec4{0.0, w1, 0.0, w3};
  const cd v1 = dp.rho * s * s / dp.K;
  const cd from_state = state[2] - v1 * state[0];

  const ZKernel7 z = tb_z(x, wn, policy);
  const ModalRoots r = wn.roots();
  const cd ll = r.lambda_sq[0] * r.lambda_sq[1];
  const cd c1 = w1 / sys.rhs_scale, c2 = w3 / sys.rhs_scale;
  const double K = dp.K;
  const cd rs2 = dp.rho * s * s;
  const cd from_kernels =
      ((-ll * K * z.z4 - rs2 * z.z2) * c1 + (K * z.z5 - rs2 * z.z4) * c2) /
      (K * K);

  const double dev = std::abs(from_kernels - from_state);
  const double mag = std::max(std::abs(from_kernels), std::abs(from_state));
  return mag > 0.0 ? dev / mag : 0.0;
}

}  // namespace beamtf
