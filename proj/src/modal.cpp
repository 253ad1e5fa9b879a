#include "beamtf/modal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "beamtf/errors.hpp"

namespace beamtf {

namespace {

void guard_exponent(cd lambda, double x, const NumericPolicy& policy) {
  const double e = std::abs(lambda.real() * x);
  if (!(e <= policy.overflow_exponent)) {
    std::ostringstream msg;
    msg << "|Re(lambda) x| = " << e << " exceeds the exponential guard "
        << policy.overflow_exponent;
    throw Error(ErrorKind::Overflow, msg.str());
  }
}

// e_n = sum_{k<n} p1^k p2^(n-1-k), so that p1^n - p2^n = (p1 - p2) e_n.
std::array<cd, 5> power_difference_factors(cd p1, cd p2) {
  std::array<cd, 5> e{};
  e[1] = 1.0;
  cd p2n = 1.0;
  for (int n = 2; n <= 4; ++n) {
    p2n *= p2;
    e[n] = p1 * e[n - 1] + p2n;
  }
  return e;
}

bool both_small(const ModalRoots& r, double x, const NumericPolicy& policy) {
  return std::abs(r.lambda[0] * x) < policy.series_threshold &&
         std::abs(r.lambda[1] * x) < policy.series_threshold;
}

}  // namespace

HyperbolicPair hyperbolic_pair(cd lambda, cd lambda_sq, double x,
                               const NumericPolicy& policy) {
  guard_exponent(lambda, x, policy);
  if (std::abs(lambda * x) < policy.series_threshold) {
    const cd t = lambda_sq * (x * x);
    return {
        1.0 + t * (1.0 / 2.0 + t * (1.0 / 24.0 + t / 720.0)),
        x * (1.0 + t * (1.0 / 6.0 + t * (1.0 / 120.0 + t / 5040.0))),
    };
  }
  const cd arg = lambda * x;
  return {std::cosh(arg), std::sinh(arg) / lambda};
}

cd cosh_difference(const ModalRoots& r, double x, const NumericPolicy& policy) {
  if (both_small(r, x, policy)) {
    const cd p1 = r.lambda_sq[0], p2 = r.lambda_sq[1];
    const auto e = power_difference_factors(p1, p2);
    const double x2 = x * x;
    return (p1 - p2) * x2 *
           (0.5 + x2 * (e[2] / 24.0 + x2 * (e[3] / 720.0 + x2 * e[4] / 40320.0)));
  }
  guard_exponent(r.lambda[0], x, policy);
  guard_exponent(r.lambda[1], x, policy);
  return std::cosh(r.lambda[0] * x) - std::cosh(r.lambda[1] * x);
}

cd sinh_ratio_difference(const ModalRoots& r, double x,
                         const NumericPolicy& policy) {
  if (both_small(r, x, policy)) {
    const cd p1 = r.lambda_sq[0], p2 = r.lambda_sq[1];
    const auto e = power_difference_factors(p1, p2);
    const double x2 = x * x;
    return (p1 - p2) * x * x2 *
           (1.0 / 6.0 +
            x2 * (e[2] / 120.0 + x2 * (e[3] / 5040.0 + x2 * e[4] / 362880.0)));
  }
  return hyperbolic_pair(r.lambda[0], r.lambda_sq[0], x, policy).s -
         hyperbolic_pair(r.lambda[1], r.lambda_sq[1], x, policy).s;
}

BalancedSystem build_balanced_system(const ModalRoots& roots, double ell,
                                     double ell0, const InterfaceRows& rows,
                                     const Vec4& rhs,
                                     const NumericPolicy& policy) {
  BalancedSystem sys;
  sys.roots = roots;
  sys.ell = ell;
  sys.ell0 = ell0;
  sys.rhs = rhs;
  for (int j = 0; j < 2; ++j) {
    const cd lam = roots.lambda[j];
    const cd p = roots.lambda_sq[j];
    guard_exponent(lam, ell0, policy);
    guard_exponent(lam, ell - ell0, policy);
    sys.left_scale[j] = std::exp(std::abs(lam.real()) * ell0);
    sys.right_scale[j] = std::exp(std::abs(lam.real()) * (ell - ell0));

    const auto hl = hyperbolic_pair(lam, p, ell0, policy);
    const double gl = sys.left_scale[j];
    const Jet4 left{hl.s / gl, hl.c / gl, p * hl.s / gl, p * hl.c / gl};
    const Vec4 cl = rows(left, Side::Left);

    const auto hr = hyperbolic_pair(lam, p, ell0 - ell, policy);
    const double gr = sys.right_scale[j];
    const Jet4 right{hr.s / gr, hr.c / gr, p * hr.s / gr, p * hr.c / gr};
    const Vec4 cr = rows(right, Side::Right);

    for (int i = 0; i < 4; ++i) {
      sys.matrix[i][j] = cl[i];
      sys.matrix[i][2 + j] = cr[i];
    }
  }
  return sys;
}

ModalField::ModalField(const BalancedSystem& sys, const Vec4& amplitudes,
                       const NumericPolicy& policy)
    : roots_(sys.roots),
      ell_(sys.ell),
      ell0_(sys.ell0),
      left_scale_(sys.left_scale),
      right_scale_(sys.right_scale),
      amp_(amplitudes),
      policy_(policy) {}

Jet5 ModalField::jet(double x, Side side) const {
  const bool left = side == Side::Left;
  const double y = left ? x : x - ell_;
  Jet5 out{};
  for (int j = 0; j < 2; ++j) {
    const cd p = roots_.lambda_sq[j];
    const auto h = hyperbolic_pair(roots_.lambda[j], p, y, policy_);
    const cd a = amp_[left ? j : 2 + j] / (left ? left_scale_[j] : right_scale_[j]);
    out[0] += a * h.s;
    out[1] += a * h.c;
    out[2] += a * p * h.s;
    out[3] += a * p * h.c;
    out[4] += a * p * p * h.s;
  }
  return out;
}

Vec4 ModalField::boundary_unknowns() const {
  Vec4 out{};
  for (int j = 0; j < 2; ++j) {
    const cd p = roots_.lambda_sq[j];
    const cd a = amp_[j] / left_scale_[j];
    const cd b = amp_[2 + j] / right_scale_[j];
    out[0] += a;
    out[1] += a * p;
    out[2] += b;
    out[3] += b * p;
  }
  return out;
}

BalancedSolve solve_balanced(const BalancedSystem& sys,
                             const NumericPolicy& policy) {
  Mat4 a = sys.matrix;
  Vec4 b = sys.rhs;
  equilibrate_rows(a, b);
  const Lu4 lu(a);
  const double cond =
      lu.singular() ? std::numeric_limits<double>::infinity() : norm1(a) * lu.inverse_norm1_estimate();
  if (!(cond <= policy.max_condition)) {
    std::ostringstream msg;
    msg << "interface system condition estimate " << cond << " exceeds "
        << policy.max_condition << " (s near an eigenvalue)";
    throw Error(ErrorKind::NearSingular, msg.str());
  }
  return {ModalField(sys, lu.solve(b), policy), cond};
}

}  // namespace beamtf
