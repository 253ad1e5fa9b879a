#pragma once

#include <array>
#include <complex>

namespace beamtf {

using cd = std::complex<double>;
using Vec4 = std::array<cd, 4>;
using Mat4 = std::array<std::array<cd, 4>, 4>;

Mat4 identity4();
Mat4 operator*(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& a, const Vec4& x);

double norm1(const Mat4& a);     ///< max column sum
double norm_max(const Mat4& a);  ///< max |a_ij|
double norm_max(const Vec4& v);

/// LU factorization with partial (row) pivoting of a 4x4 complex matrix.
class Lu4 {
 public:
  explicit Lu4(const Mat4& a);

  /// True if elimination met an exactly zero pivot column.
  bool singular() const noexcept { return singular_; }

  /// Solves A x = b. Precondition: !singular().
  Vec4 solve(const Vec4& b) const;
  /// Solves A^H x = b. Precondition: !singular().
  Vec4 solve_adjoint(const Vec4& b) const;

  /// Estimate of ||A^-1||_1 by the Hager-Higham power iteration; uses
  /// solves only, the inverse is never formed.
  double inverse_norm1_estimate() const;

 private:
  Mat4 lu_{};
  std::array<int, 4> perm_{};
  bool singular_ = false;
};

/// ||A||_1 * est(||A^-1||_1); +inf when A is exactly singular.
double condition_estimate(const Mat4& a);

/// Scales each row of a (and the matching rhs entry) by 1/max|row|.
void equilibrate_rows(Mat4& a, Vec4& rhs);

}  // namespace beamtf
