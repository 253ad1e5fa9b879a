#pragma once

#include "beamtf/complex_linalg.hpp"

namespace beamtf {

/// Surviving end derivatives W'(0), W'''(0), W'(ell), W'''(ell); W and W''
/// vanish at both pinned ends.
struct BoundaryUnknowns {
  cd W1_0;
  cd W3_0;
  cd W1_l;
  cd W3_l;
};

struct DirectSolve {
  BoundaryUnknowns x;
  double condition = 0.0;  ///< 1-norm condition estimate of the raw matrix
};

/// Solves M x = (0, 0, 0, rhs4) by partial-pivoting elimination. Only the
/// solution vector (a multiple of the fourth column of M^-1) is formed.
/// Throws NearSingular if elimination meets a zero pivot or the result is
/// not finite.
DirectSolve solve_interface(const Mat4& M, cd rhs4);

}  // namespace beamtf
