#include "beamtf/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace beamtf {

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Vec4 operator*(const Mat4& a, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) y[i] += a[i][j] * x[j];
  return y;
}

double norm1(const Mat4& a) {
  double best = 0.0;
  for (int j = 0; j < 4; ++j) {
    double col = 0.0;
    for (int i = 0; i < 4; ++i) col += std::abs(a[i][j]);
    best = std::max(best, col);
  }
  return best;
}

double norm_max(const Mat4& a) {
  double best = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) best = std::max(best, std::abs(v));
  return best;
}

double norm_max(const Vec4& v) {
  double best = 0.0;
  for (const auto& x : v) best = std::max(best, std::abs(x));
  return best;
}

Lu4::Lu4(const Mat4& a) : lu_(a) {
  for (int i = 0; i < 4; ++i) perm_[i] = i;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    double best = std::abs(lu_[k][k]);
    for (int i = k + 1; i < 4; ++i) {
      const double v = std::abs(lu_[i][k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (piv != k) {
      std::swap(lu_[piv], lu_[k]);
      std::swap(perm_[piv], perm_[k]);
    }
    for (int i = k + 1; i < 4; ++i) {
      const cd factor = lu_[i][k] / lu_[k][k];
      lu_[i][k] = factor;
      for (int j = k + 1; j < 4; ++j) lu_[i][j] -= factor * lu_[k][j];
    }
  }
}

Vec4 Lu4::solve(const Vec4& b) const {
  Vec4 y{};
  for (int i = 0; i < 4; ++i) {
    cd acc = b[perm_[i]];
    for (int j = 0; j < i; ++j) acc -= lu_[i][j] * y[j];
    y[i] = acc;
  }
  for (int i = 3; i >= 0; --i) {
    cd acc = y[i];
    for (int j = i + 1; j < 4; ++j) acc -= lu_[i][j] * y[j];
    y[i] = acc / lu_[i][i];
  }
  return y;
}

Vec4 Lu4::solve_adjoint(const Vec4& b) const {
  // P A = L U  =>  A^H = U^H L^H P, so solve U^H w = b, L^H v = w, x = P^T v.
  Vec4 w{};
  for (int i = 0; i < 4; ++i) {
    cd acc = b[i];
    for (int j = 0; j < i; ++j) acc -= std::conj(lu_[j][i]) * w[j];
    w[i] = acc / std::conj(lu_[i][i]);
  }
  for (int i = 3; i >= 0; --i) {
    cd acc = w[i];
    for (int j = i + 1; j < 4; ++j) acc -= std::conj(lu_[j][i]) * w[j];
    w[i] = acc;
  }
  Vec4 x{};
  for (int i = 0; i < 4; ++i) x[perm_[i]] = w[i];
  return x;
}

double Lu4::inverse_norm1_estimate() const {
  if (singular_) return std::numeric_limits<double>::infinity();
  auto l1 = [](const Vec4& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::abs(x);
    return s;
  };

  Vec4 x;
  x.fill(cd{0.25, 0.0});
  double est = 0.0;
  int last_j = -1;
  for (int iter = 0; iter < 5; ++iter) {
    const Vec4 y = solve(x);
    const double ny = l1(y);
    if (iter > 0 && ny <= est) break;
    est = ny;
    Vec4 xi;
    for (int i = 0; i < 4; ++i) {
      const double m = std::abs(y[i]);
      xi[i] = m > 0.0 ? y[i] / m : cd{1.0, 0.0};
    }
    const Vec4 z = solve_adjoint(xi);
    int j = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    if (iter > 0 && j == last_j) break;
    last_j = j;
    x.fill(cd{});
    x[j] = 1.0;
  }

  // Alternating test vector guards against the power iteration stalling.
  Vec4 alt;
  for (int i = 0; i < 4; ++i) alt[i] = (i % 2 ? -1.0 : 1.0) * (1.0 + i / 3.0);
  const double alt_est = 2.0 * l1(solve(alt)) / 12.0;
  return std::max(est, alt_est);
}

double condition_estimate(const Mat4& a) {
  const Lu4 lu(a);
  if (lu.singular()) return std::numeric_limits<double>::infinity();
  return norm1(a) * lu.inverse_norm1_estimate();
}

void equilibrate_rows(Mat4& a, Vec4& rhs) {
  for (int i = 0; i < 4; ++i) {
    double m = 0.0;
    for (const auto& v : a[i]) m = std::max(m, std::abs(v));
    if (m == 0.0) continue;
    for (auto& v : a[i]) v /= m;
    rhs[i] /= m;
  }
}

}  // namespace beamtf
