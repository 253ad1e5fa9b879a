#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "beamtf/cli/commands.hpp"
#include "beamtf/cli/config.hpp"
#include "beamtf/cli/csv.hpp"
#include "beamtf/cli/units.hpp"

using namespace beamtf;
using namespace beamtf::cli;

namespace {

RunConfig default_config() {
  return build_config(parse_entries(default_config_text(), "<default>"));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("shipped config reproduces the reference beam exactly") {
  const RunConfig cfg = default_config();
  const BeamParams r = reference_params();
  CHECK(cfg.beam.ell == r.ell);
  CHECK(cfg.beam.ell0 == r.ell0);
  CHECK(cfg.beam.ellk == r.ellk);
  CHECK(cfg.beam.rho0 == r.rho0);
  CHECK(cfg.beam.A == r.A);
  CHECK(cfg.beam.E == r.E);
  CHECK(cfg.beam.G == r.G);
  CHECK(cfg.beam.I == r.I);
  CHECK(cfg.beam.k_shear == r.k_shear);
  CHECK(cfg.beam.m_att == r.m_att);
  CHECK(cfg.beam.kappa == r.kappa);
  CHECK(cfg.beam.d == r.d);
  CHECK(cfg.damping == std::vector<double>{r.d});
  CHECK(cfg.sweep.n_points == 2048);
  CHECK_NOTHROW(check_config(cfg));
}

TEST_CASE("the file in configs/ matches the built-in text") {
  const RunConfig a = load_config(BEAMTF_SOURCE_DIR "/configs/reference_beam.cfg");
  const RunConfig b = default_config();
  CHECK(a.beam.A == b.beam.A);
  CHECK(a.beam.kappa == b.beam.kappa);
  CHECK(a.peak_hi == b.peak_hi);
}

TEST_CASE("unit conversion") {
  CHECK(to_si(7.0, "N/mm", Dimension::Stiffness) == 7000.0);
  CHECK(to_si(2.25, "cm^2", Dimension::Area) == 2.25e-4);
  CHECK(to_si(69.0, "GPa", Dimension::Pressure) == 69e9);
  CHECK(to_si(2.7, "g/cm^3", Dimension::Density) == 2700.0);
  CHECK(to_si(1.5, "", Dimension::Length) == 1.5);
  CHECK(kind_of([] { to_si(1.0, "furlong", Dimension::Length); }) == ErrorKind::Parse);
  CHECK(kind_of([] { to_si(1.0, "kg", Dimension::Length); }) == ErrorKind::Parse);
}

TEST_CASE("config parsing and validation") {
  ConfigEntries e = parse_entries(default_config_text(), "<default>");
  e.erase("ellk");
  CHECK(build_config(e).beam.ellk == build_config(e).beam.ell0);

  apply_set(e, "d=-1");
  try {
    check_config(build_config(e));
    FAIL("expected Validation");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Validation);
    CHECK(std::string(err.what()).find("d") != std::string::npos);
  }

  CHECK(kind_of([] { parse_entries("colour = red\n", "t.cfg"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_entries("ell = 1\nell = 2\n", "t.cfg"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_entries("ell 1\n", "t.cfg"); }) == ErrorKind::Parse);

  ConfigEntries z = parse_entries(default_config_text(), "<default>");
  apply_set(z, "A=0");
  const ErrorKind k = kind_of([&] { check_config(build_config(z)); });
  CHECK(k == ErrorKind::Validation);
  CHECK(exit_code_for(k) == 1);
  CHECK(exit_code_for(ErrorKind::NearSingular) == 2);
  CHECK(exit_code_for(ErrorKind::EmptyRange) == 0);
}

TEST_CASE("small parsers") {
  CHECK(parse_range("3:7.5") == std::pair{3.0, 7.5});
  CHECK(parse_damping_list("0.025,1,10") == std::vector<double>{0.025, 1.0, 10.0});
  CHECK(parse_model("euler") == ModelKind::EulerBernoulli);
  CHECK(parse_output("curvature") == OutputKind::Curvature);
  CHECK_THROWS_AS(parse_range("3-7"), Error);
  CHECK_THROWS_AS(parse_model("rayleigh"), Error);
}

TEST_CASE("CSV formatting round trip") {
  CHECK(format_g12(0.1) == "0.1");
  CHECK(format_g12(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_g12(-std::numeric_limits<double>::quiet_NaN()) == "nan");

  const BeamParams p = reference_params();
  SweepSpec spec;
  spec.n_points = 50;
  spec.nu_min = 1e-4;  // below the floor, rejected by check_spec
  CHECK_THROWS_AS(sweep(spec, p, derive_params(p), p.ellk), Error);
  spec.nu_min = 1.0;
  const auto samples = sweep(spec, p, derive_params(p), p.ellk);
  const std::string csv = sweep_csv(samples);
  CHECK(csv.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  const auto back = parse_sweep_csv(csv);
  REQUIRE(back.size() == samples.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].nu_hz == Catch::Approx(samples[i].nu).epsilon(1e-11));
    CHECK(back[i].mag == Catch::Approx(samples[i].mag).epsilon(1e-11));
    CHECK(back[i].status == "ok");
  }
  CHECK_THROWS_AS(parse_sweep_csv("nu,foo\n1,2\n"), Error);
}

TEST_CASE("eval is deterministic") {
  const RunConfig cfg = default_config();
  std::ostringstream a, b;
  CHECK(cmd_eval(cfg, 12.5, a) == 0);
  CHECK(cmd_eval(cfg, 12.5, b) == 0);
  CHECK(a.str() == b.str());
  CHECK(count_lines(a.str()) == 1);
}

TEST_CASE("sweep writes one row per point") {
  const RunConfig cfg = default_config();
  std::ostringstream out, err;
  CHECK(cmd_sweep(cfg, out, err) == 0);
  CHECK(count_lines(out.str()) == 2049);

  RunConfig two = cfg;
  two.damping = {0.025, 1.0};
  CHECK(kind_of([&] { cmd_sweep(two, out, err); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("peaks command") {
  RunConfig cfg = default_config();
  std::ostringstream out, err;
  CHECK(cmd_peaks(cfg, out, err) == 0);
  CHECK(count_lines(out.str()) == 6);
  CHECK(out.str().rfind("mode,nu_hz,mag\n", 0) == 0);

  cfg.damping = {0.025, 10.0};
  std::ostringstream out2;
  CHECK(cmd_peaks(cfg, out2, err) == 0);
  CHECK(count_lines(out2.str()) == 11);
  CHECK(out2.str().rfind("d,mode,nu_hz,mag\n", 0) == 0);

  cfg.damping = {0.025};
  cfg.peak_lo = 200.0;
  cfg.peak_hi = 201.0;
  std::ostringstream out3, err3;
  CHECK(cmd_peaks(cfg, out3, err3) == 0);
  CHECK(count_lines(out3.str()) == 1);
  CHECK(err3.str().find("warning") != std::string::npos);
}

TEST_CASE("verify passes on the reference beam") {
  std::ostringstream out;
  CHECK(cmd_verify(default_config(), out) == 0);
  CHECK(out.str().find("verify: PASS") != std::string::npos);

  const auto f1 = verify_frequencies(10, 1.0, 250.0, 20240607);
  const auto f2 = verify_frequencies(10, 1.0, 250.0, 20240607);
  CHECK(f1 == f2);
  for (double f : f1) {
    CHECK(f >= 1.0);
    CHECK(f <= 250.0);
  }
}
