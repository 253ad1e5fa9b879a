#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <vector>

#include "beamtf/errors.hpp"
#include "beamtf/verification.hpp"

namespace beamtf {

namespace {

using Triplet = Eigen::Triplet<cd>;

// Two fields per node, W and Phi (see fd_bvp_oracle).
// Segment 0 spans [0, ell0] with nodes 0..n0, segment 1 spans [ell0, ell]
// with nodes 0..n1; the node at ell0 exists once per segment.
class Grid {
 public:
  Grid(int n0, int n1, double h0, double h1)
      : n_{n0, n1}, h_{h0, h1}, offset1_(2 * (n0 + 1)) {}

  int index(int seg, int node, int field) const {
    return (seg == 0 ? 0 : offset1_) + 2 * node + field;
  }
  int nodes(int seg) const { return n_[seg]; }
  double h(int seg) const { return h_[seg]; }
  int size() const { return offset1_ + 2 * (n_[1] + 1); }

 private:
  int n_[2];
  double h_[2];
  int offset1_;
};

struct Assembler {
  const Grid& g;
  std::vector<Triplet> t;
  int row = 0;

  void add(int col, cd v) { t.emplace_back(row, col, v); }

  // Coefficients of a second-order one-sided first derivative of `field`
  // at the given segment end, scaled by c.
  void end_derivative(int seg, bool at_start, int field, cd c) {
    const double h = g.h(seg);
    if (at_start) {
      add(g.index(seg, 0, field), -3.0 * c / (2.0 * h));
      add(g.index(seg, 1, field), 4.0 * c / (2.0 * h));
      add(g.index(seg, 2, field), -1.0 * c / (2.0 * h));
    } else {
      const int n = g.nodes(seg);
      add(g.index(seg, n, field), 3.0 * c / (2.0 * h));
      add(g.index(seg, n - 1, field), -4.0 * c / (2.0 * h));
      add(g.index(seg, n - 2, field), 1.0 * c / (2.0 * h));
    }
  }
};

// Quadratic Lagrange interpolation of nodal values at x within a segment.
cd interpolate(const std::vector<cd>& f, double x0, double h, double x) {
  const int n = static_cast<int>(f.size()) - 1;
  int i = static_cast<int>(std::lround((x - x0) / h));
  i = std::clamp(i, 1, n - 1);
  const double t = (x - (x0 + i * h)) / h;
  return f[i - 1] * (t * (t - 1.0) / 2.0) + f[i] * (1.0 - t * t) +
         f[i + 1] * (t * (t + 1.0) / 2.0);
}

}  // namespace

cd fd_bvp_oracle(ModelKind model, const BeamParams& p, const DerivedParams& dp,
                 cd s, double ellk, OutputKind kind, int n_nodes) {
  if (n_nodes < 500) {
    throw Error(ErrorKind::InvalidArgument, "fd_bvp_oracle needs n_nodes >= 500");
  }
  const bool tb = model == ModelKind::Timoshenko;
  const int n0 = std::max(
      4, static_cast<int>(std::lround(n_nodes * p.ell0 / p.ell)));
  const int n1 = std::max(4, n_nodes - n0);
  const Grid g(n0, n1, p.ell0 / n0, (p.ell - p.ell0) / n1);
  const cd s2 = s * s;
  const cd Z = attachment_impedance(p, s);
  const cd U = 1.0;

  Assembler a{g, {}, 0};
  Eigen::VectorX<cd> rhs = Eigen::VectorX<cd>::Zero(g.size());

  // Both models in the fields (W, Phi). Phi = Psi' for Timoshenko, whose
  // second equation is used in differentiated form
  //   EI Phi'' + rho s^2 W - I_rho s^2 Phi = 0,
  // which avoids the stiff K (W' - Psi) coupling; Phi = W'' for
  // Euler-Bernoulli, where the I_rho and 1/K terms drop out.
  const cd c_w = tb ? dp.rho * s2 / dp.K : cd{0.0};
  const cd c_phi = tb ? dp.I_rho * s2 / dp.EI : cd{0.0};
  const cd c_couple = dp.rho * s2 / dp.EI;
  for (int seg = 0; seg < 2; ++seg) {
    const double ih2 = 1.0 / (g.h(seg) * g.h(seg));
    for (int i = 1; i < g.nodes(seg); ++i) {
      const int wm = g.index(seg, i - 1, 0), w0 = g.index(seg, i, 0),
                wp = g.index(seg, i + 1, 0);
      const int qm = g.index(seg, i - 1, 1), q0 = g.index(seg, i, 1),
                qp = g.index(seg, i + 1, 1);
      // W'' - Phi - c_w W = 0
      a.add(wm, ih2);
      a.add(w0, -2.0 * ih2 - c_w);
      a.add(wp, ih2);
      a.add(q0, -1.0);
      ++a.row;
      // Phi'' + (rho s^2 / EI) W - c_phi Phi = 0
      a.add(qm, ih2);
      a.add(q0, -2.0 * ih2 - c_phi);
      a.add(qp, ih2);
      a.add(w0, c_couple);
      ++a.row;
    }
  }

  // Pinned ends: W = 0 and Phi = 0.
  for (int seg = 0; seg < 2; ++seg) {
    const int node = seg == 0 ? 0 : g.nodes(1);
    for (int field = 0; field < 2; ++field) {
      a.add(g.index(seg, node, field), 1.0);
      ++a.row;
    }
  }

  // Interface at ell0: last node of segment 0 meets first node of segment 1.
  // W and Phi are continuous. The shear force jumps by U - Z W; for
  // Timoshenko that is K (W'_L - W'_R) + Z W = U, for Euler-Bernoulli W' is
  // continuous instead. Continuity of Psi (Timoshenko) and the force balance
  // (Euler-Bernoulli) both read EI (Phi'_L - Phi'_R) - Z W = -U.
  const int L = g.nodes(0);
  for (int field = 0; field < 2; ++field) {
    a.add(g.index(0, L, field), 1.0);
    a.add(g.index(1, 0, field), -1.0);
    ++a.row;
  }
  a.end_derivative(0, false, 0, 1.0);
  a.end_derivative(1, true, 0, -1.0);
  if (tb) {
    a.add(g.index(0, L, 0), Z / dp.K);
    rhs[a.row] = U / dp.K;
  }
  ++a.row;
  a.end_derivative(0, false, 1, 1.0);
  a.end_derivative(1, true, 1, -1.0);
  a.add(g.index(0, L, 0), -Z / dp.EI);
  rhs[a.row] = -U / dp.EI;
  ++a.row;

  Eigen::SparseMatrix<cd> m(g.size(), g.size());
  m.setFromTriplets(a.t.begin(), a.t.end());
  m.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<cd>> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success) {
    throw Error(ErrorKind::SingularDiscretization,
                "finite-difference system could not be factored");
  }
  const Eigen::VectorX<cd> x = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !x.allFinite()) {
    throw Error(ErrorKind::SingularDiscretization,
                "finite-difference solve failed");
  }

  const int seg = ellk <= p.ell0 ? 0 : 1;
  const double x0 = seg == 0 ? 0.0 : p.ell0;
  std::vector<cd> w(g.nodes(seg) + 1), q(g.nodes(seg) + 1);
  for (int i = 0; i <= g.nodes(seg); ++i) {
    w[i] = x[g.index(seg, i, 0)];
    q[i] = x[g.index(seg, i, 1)];
  }
  return interpolate(kind == OutputKind::Displacement ? w : q, x0, g.h(seg),
                     ellk);
}

}  // namespace beamtf
