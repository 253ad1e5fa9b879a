#include "beamtf/interface_system.hpp"

#include <cmath>

#include "beamtf/errors.hpp"

namespace beamtf {

DirectSolve solve_interface(const Mat4& M, cd rhs4) {
  const Lu4 lu(M);
  if (lu.singular()) {
    throw Error(ErrorKind::NearSingular, "interface matrix is singular");
  }
  const Vec4 x = lu.solve(Vec4{0.0, 0.0, 0.0, rhs4});
  for (const cd& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::NearSingular,
                  "interface solve produced a non-finite result");
    }
  }
  return {{x[0], x[1], x[2], x[3]}, norm1(M) * lu.inverse_norm1_estimate()};
}

}  // namespace beamtf
