#include <algorithm>
#include <cmath>
#include <complex>

#include "beamtf/errors.hpp"
#include "beamtf/verification.hpp"

namespace beamtf {

namespace {

using cl = std::complex<long double>;
using MatL = std::array<std::array<cl, 4>, 4>;

MatL mul(const MatL& a, const MatL& b) {
  MatL c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

long double norm1(const MatL& a) {
  long double best = 0;
  for (int j = 0; j < 4; ++j) {
    long double col = 0;
    for (int i = 0; i < 4; ++i) col += std::abs(a[i][j]);
    best = std::max(best, col);
  }
  return best;
}

double root_bound(const Mat4& a) {
  double sigma = 1.0;
  for (int k = 0; k < 4; ++k) {
    const double c = std::abs(a[3][k]);
    if (c > 0.0) sigma = std::max(sigma, std::pow(c, 1.0 / (4 - k)));
  }
  return sigma;
}

}  // namespace

Mat4 expm_series_oracle(const Mat4& companion, double x) {
  MatL a{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a[i][j] = cl(companion[i][j].real(), companion[i][j].imag()) *
                static_cast<long double>(x);

  int squarings = 0;
  const long double n = norm1(a);
  if (n > 0.25L) squarings = static_cast<int>(std::ceil(std::log2(n / 0.25L)));
  const long double scale = std::ldexp(1.0L, -squarings);
  for (auto& row : a)
    for (auto& v : row) v *= scale;

  // ||a|| <= 1/4: 24 terms leave a remainder far below long double epsilon.
  MatL result{}, term{};
  for (int i = 0; i < 4; ++i) result[i][i] = term[i][i] = 1;
  for (int k = 1; k <= 24; ++k) {
    term = mul(term, a);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<long double>(k);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) result[i][j] += term[i][j];
  }
  for (int k = 0; k < squarings; ++k) result = mul(result, result);

  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      out[i][j] = cd(static_cast<double>(result[i][j].real()),
                     static_cast<double>(result[i][j].imag()));
      if (!std::isfinite(out[i][j].real()) || !std::isfinite(out[i][j].imag()))
        throw Error(ErrorKind::Overflow, "series oracle overflowed");
    }
  return out;
}

double expm_oracle_deviation(const Mat4& closed, const Mat4& companion,
                             double x) {
  const double sigma = root_bound(companion);
  Mat4 balanced = companion;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) balanced[i][j] *= std::pow(sigma, j - i);
  const Mat4 oracle = expm_series_oracle(balanced, x);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cd c = closed[i][j] * std::pow(sigma, j - i);
      num = std::max(num, std::abs(c - oracle[i][j]));
      den = std::max(den, std::abs(oracle[i][j]));
    }
  return num / den;
}

}  // namespace beamtf
