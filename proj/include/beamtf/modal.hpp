#pragma once

#include <array>
#include <functional>

#include "beamtf/complex_linalg.hpp"
#include "beamtf/numeric_policy.hpp"

namespace beamtf {

/// The pair of characteristic roots of a pinned fourth-order beam ODE
/// W'''' - (l1^2 + l2^2) W'' + l1^2 l2^2 W = 0.
struct ModalRoots {
  std::array<cd, 2> lambda{};
  std::array<cd, 2> lambda_sq{};
};

/// cosh(lambda x) and sinh(lambda x)/lambda, the latter finite at lambda = 0.
struct HyperbolicPair {
  cd c;  ///< cosh(lambda x)
  cd s;  ///< sinh(lambda x) / lambda
};

/// Evaluates the pair with a four-term Taylor series when |lambda x| is
/// below the policy threshold. Throws Overflow past the exp guard.
HyperbolicPair hyperbolic_pair(cd lambda, cd lambda_sq, double x,
                               const NumericPolicy& policy);

/// cosh(l1 x) - cosh(l2 x) without cancellation for small arguments.
cd cosh_difference(const ModalRoots& roots, double x,
                   const NumericPolicy& policy);

/// sinh(l1 x)/l1 - sinh(l2 x)/l2 without cancellation for small arguments.
cd sinh_ratio_difference(const ModalRoots& roots, double x,
                         const NumericPolicy& policy);

enum class Side { Left, Right };

/// W, W', W'', W''' of one field at a point.
using Jet4 = std::array<cd, 4>;
/// W, W', W'', W''', W'''' of one field at a point.
using Jet5 = std::array<cd, 5>;

/// Maps the jet of a segment field at the attachment point onto the four
/// interface conditions (left minus right convention, attachment terms on
/// the left side).
using InterfaceRows = std::function<Vec4(const Jet4& jet, Side side)>;

/// Interface conditions expressed in the scaled modal basis
///   left:  phi_j(x) = sinh(l_j x) / (l_j g_j),        g_j = e^{|Re l_j| ell0}
///   right: chi_j(x) = sinh(l_j (x-ell)) / (l_j h_j),  h_j = e^{|Re l_j| (ell-ell0)}
/// Unknowns are the amplitudes (left_1, left_2, right_1, right_2). Every
/// basis function already satisfies W = W'' = 0 at its pinned end.
struct BalancedSystem {
  ModalRoots roots;
  double ell = 0.0;
  double ell0 = 0.0;
  std::array<double, 2> left_scale{};
  std::array<double, 2> right_scale{};
  Mat4 matrix{};
  Vec4 rhs{};
};

BalancedSystem build_balanced_system(const ModalRoots& roots, double ell,
                                     double ell0, const InterfaceRows& rows,
                                     const Vec4& rhs,
                                     const NumericPolicy& policy);

/// Two-segment solution of the pinned beam in the scaled modal basis.
class ModalField {
 public:
  ModalField(const BalancedSystem& sys, const Vec4& amplitudes,
             const NumericPolicy& policy);

  /// Derivatives 0..4 at x using the given segment's representation.
  Jet5 jet(double x, Side side) const;
  /// Left branch for x <= ell0, right branch otherwise.
  Jet5 jet(double x) const { return jet(x, x <= ell0_ ? Side::Left : Side::Right); }

  /// (W'(0), W'''(0), W'(ell), W'''(ell)).
  Vec4 boundary_unknowns() const;

  const ModalRoots& roots() const noexcept { return roots_; }
  double ell() const noexcept { return ell_; }
  double ell0() const noexcept { return ell0_; }
  const Vec4& amplitudes() const noexcept { return amp_; }

 private:
  ModalRoots roots_;
  double ell_;
  double ell0_;
  std::array<double, 2> left_scale_;
  std::array<double, 2> right_scale_;
  Vec4 amp_;
  NumericPolicy policy_;
};

struct BalancedSolve {
  ModalField field;
  double condition;  ///< 1-norm estimate of the row-equilibrated system
};

/// Row-equilibrates, factors and solves. Throws NearSingular when the
/// condition estimate exceeds policy.max_condition.
BalancedSolve solve_balanced(const BalancedSystem& sys,
                             const NumericPolicy& policy);

}  // namespace beamtf
