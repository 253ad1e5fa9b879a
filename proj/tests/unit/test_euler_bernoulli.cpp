#include <catch2/catch_amalgamated.hpp>
#include <numbers>
#include <random>

#include "beamtf/euler_bernoulli.hpp"
#include "hp_oracle.hpp"

using namespace beamtf;
using Catch::Matchers::WithinRel;

namespace {

const BeamParams P = reference_params();
const DerivedParams DP = derive_params(P);

std::array<cd, 4> as_array(const ZKernel4& z) { return {z.z1, z.z2, z.z3, z.z4}; }

double matrix_rel(const Mat4& a, const Mat4& b) {
  double num = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) num = std::max(num, std::abs(a[i][j] - b[i][j]));
  return num / norm_max(b);
}

}  // namespace

TEST_CASE("gamma at 10 Hz matches the frozen value") {
  const cd g = eb_gamma(DP, laplace_at_hz(10.0)).gamma;
  CHECK_THAT(g.real(), WithinRel(3.7883778324244313, 1e-14));
  CHECK(std::abs(g.imag()) < 1e-15);
}

TEST_CASE("gamma is the principal fourth root") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> re(-100.0, 100.0), im(-1600.0, 1600.0);
  for (int i = 0; i < 300; ++i) {
    const cd s{re(rng), im(rng)};
    if (std::abs(s) < 1.0) continue;
    const cd g = eb_gamma(DP, s).gamma;
    const cd g4 = -DP.rho * s * s / DP.EI;
    CHECK(std::abs(g * g * g * g - g4) <= 1e-13 * std::abs(g4));
    CHECK(std::arg(g) > -std::numbers::pi / 4 - 1e-15);
    CHECK(std::arg(g) <= std::numbers::pi / 4 + 1e-15);
    CHECK(std::abs(g - hp_oracle::eb_gamma(DP, s)) <= 1e-14 * std::abs(g));
  }
}

TEST_CASE("kernels at x = 0 and parity") {
  const EbWavenumber g = eb_gamma(DP, laplace_at_hz(44.0));
  const ZKernel4 z0 = eb_z(0.0, g);
  CHECK(z0.z1 == cd{2.0});
  CHECK(z0.z2 == cd{0.0});
  CHECK(z0.z3 == cd{0.0});
  CHECK(z0.z4 == cd{0.0});

  for (double x : {1e-5, 0.4, 1.905}) {
    const auto pos = as_array(eb_z(x, g));
    const auto neg = as_array(eb_z(-x, g));
    for (int i : {0, 2}) CHECK(std::abs(neg[i] - pos[i]) <= 1e-15 * std::abs(pos[i]));
    for (int i : {1, 3}) CHECK(std::abs(neg[i] + pos[i]) <= 1e-15 * std::abs(pos[i]));
  }
}

TEST_CASE("EB kernels match 50-digit evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> nu(0.5, 250.0), sig(-20.0, 20.0),
      xs(-1.905, 1.905);
  for (int i = 0; i < 100; ++i) {
    const cd s{sig(rng), 2.0 * std::numbers::pi * nu(rng)};
    const double x = xs(rng);
    const auto z = as_array(eb_z(x, eb_gamma(DP, s)));
    const auto ref = hp_oracle::eb_kernels(DP, s, x);
    for (int k = 0; k < 4; ++k) {
      INFO("kernel " << k + 1 << " at s=" << s << " x=" << x);
      CHECK(std::abs(z[k] - hp_oracle::to_cd(ref[k].v)) <= 1e-12 * ref[k].scale);
    }
  }
}

TEST_CASE("EB matrix exponential identities") {
  const EbWavenumber g = eb_gamma(DP, laplace_at_hz(75.0));
  CHECK(matrix_rel(eb_expm(0.0, g), identity4()) == 0.0);
  for (double x : {0.3, 1.1})
    for (double y : {-0.5, 0.9}) {
      const Mat4 ab = eb_expm(x, g) * eb_expm(y, g);
      CHECK(matrix_rel(ab, eb_expm(x + y, g)) <= 1e-11);
    }
  // Companion relation: the derivative of row i is row i + 1.
  const double h = 1e-6 * P.ell;
  const Mat4 e = eb_expm(0.7, g), ep = eb_expm(0.7 + h, g), em = eb_expm(0.7 - h, g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) {
      const cd fd = (ep[i][j] - em[i][j]) / (2.0 * h);
      CHECK(std::abs(fd - e[i + 1][j]) <= 1e-6 * norm_max(e));
    }
}

TEST_CASE("EB interface matrix structure") {
  const cd s = laplace_at_hz(9.0);
  const EbWavenumber g = eb_gamma(DP, s);
  const EbInterfaceSystem sys = eb_interface_matrix(DP, P, s);
  const ZKernel4 l = eb_z(P.ell0, g), r = eb_z(P.ell0 - P.ell, g);
  CHECK(sys.Mt[0][0] == l.z2);
  CHECK(sys.Mt[0][1] == l.z4);
  CHECK(sys.Mt[0][2] == -r.z2);
  CHECK(sys.Mt[0][3] == -r.z4);
  CHECK(sys.rhs_scale == cd{2.0 / DP.EI});

  BeamParams bare = P;
  bare.m_att = bare.d = bare.kappa = 0.0;
  CHECK(eb_interface_matrix(DP, bare, s).vt == cd{0.0});
}

TEST_CASE("EB boundary solve with zero input") {
  const BoundaryUnknowns z = eb_solve_boundary(eb_interface_matrix(DP, P, laplace_at_hz(5.0)), 0.0);
  CHECK(z.W1_0 == cd{0.0});
  CHECK(z.W3_l == cd{0.0});
}

TEST_CASE("EB direct and balanced routes agree") {
  for (double nu = 1.0; nu <= 30.0; nu += 0.75)
    for (OutputKind kind : {OutputKind::Displacement, OutputKind::Curvature})
      for (double ellk : {0.3, P.ell0, 1.8}) {
        const cd s = laplace_at_hz(nu);
        const cd a = eb_transfer(DP, P, s, ellk, kind);
        const cd b = eb_transfer_direct(DP, P, s, ellk, kind);
        INFO("nu=" << nu << " ellk=" << ellk);
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
      }
}

TEST_CASE("EB conjugate symmetry") {
  for (cd s : {cd{1.0, 2.0}, cd{-3.0, 40.0}, cd{0.5, 700.0}})
    for (OutputKind kind : {OutputKind::Displacement, OutputKind::Curvature}) {
      const cd h = eb_transfer(DP, P, s, P.ellk, kind);
      const cd hc = eb_transfer(DP, P, std::conj(s), P.ellk, kind);
      CHECK(std::abs(hc - std::conj(h)) <= 1e-12 * std::abs(h));
    }
}
