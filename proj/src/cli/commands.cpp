#include "beamtf/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "beamtf/cli/csv.hpp"
#include "beamtf/response.hpp"
#include "beamtf/transfer.hpp"
#include "beamtf/verification.hpp"

namespace beamtf::cli {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kH2Tol = 1e-9;
constexpr double kFdTol = 1e-3;
constexpr int kFdNodes = 4000;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateFrequency:
    case ErrorKind::RepeatedRoot:
    case ErrorKind::Overflow:
    case ErrorKind::NearSingular:
    case ErrorKind::SingularDiscretization:
      return 2;
    case ErrorKind::EmptyRange:
      return 0;
    default:
      return 1;
  }
}

int cmd_eval(const RunConfig& cfg, double nu, std::ostream& out) {
  const DerivedParams dp = derive_params(cfg.beam);
  const TransferEvaluation ev = evaluate_transfer(
      cfg.model, cfg.beam, dp, laplace_at_hz(nu), cfg.beam.ellk, cfg.kind);
  TransferSample s = sample_at(cfg.model, cfg.kind, cfg.beam, dp,
                               cfg.beam.ellk, nu);
  s.h = ev.h;
  out << "nu_hz=" << format_g12(s.nu) << " re_h=" << format_g12(s.h.real())
      << " im_h=" << format_g12(s.h.imag()) << " mag=" << format_g12(s.mag)
      << " mag_db=" << format_g12(s.mag_db)
      << " phase_rad=" << format_g12(s.phase)
      << " status=" << to_string(s.status) << '\n';
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.damping.size() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "sweep takes exactly one damping value");
  }
  BeamParams p = cfg.beam;
  p.d = cfg.damping.front();
  const DerivedParams dp = derive_params(p);
  const auto samples = sweep(cfg.sweep, p, dp, p.ellk);
  int guarded = 0;
  for (const auto& s : samples)
    if (s.status != SampleStatus::Ok && s.status != SampleStatus::Perturbed) ++guarded;
  if (guarded > 0) {
    err << "warning: " << guarded << " guarded sample(s), see status column\n";
  }
  const std::string csv = sweep_csv(samples);
  if (cfg.out_path.empty()) {
    out << csv;
  } else {
    write_file(cfg.out_path, csv);
  }
  return 0;
}

int cmd_peaks(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool with_d = cfg.damping.size() > 1;
  std::vector<PeakRow> rows;
  for (double d : cfg.damping) {
    BeamParams p = cfg.beam;
    p.d = d;
    const DerivedParams dp = derive_params(p);
    try {
      const auto peaks = find_peaks(cfg.model, cfg.kind, p, dp, p.ellk,
                                    cfg.peak_lo, cfg.peak_hi, cfg.coarse_n);
      for (std::size_t i = 0; i < peaks.size(); ++i) {
        rows.push_back({d, static_cast<int>(i) + 1, peaks[i].nu_peak,
                        peaks[i].mag_peak});
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyRange) throw;
      err << "warning: d=" << format_g12(d) << ": " << e.what() << '\n';
    }
  }
  const std::string csv = peaks_csv(rows, with_d);
  out << csv;
  if (!cfg.out_path.empty()) write_file(cfg.out_path, csv);
  return 0;
}

std::vector<double> verify_frequencies(int n, double lo, double hi,
                                       unsigned long long seed) {
  // mt19937_64 output is fixed by the standard; the distribution classes
  // are not, so the mapping to [0, 1) is done by hand.
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out.push_back(lo + u * (hi - lo));
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const BeamParams& p = cfg.beam;
  const DerivedParams dp = derive_params(p);
  bool ok = true;
  auto verdict = [&](bool pass) {
    ok = ok && pass;
    return pass ? "ok" : "FAIL";
  };

  out << "model=" << to_string(cfg.model) << " ellk=" << format_g12(p.ellk)
      << '\n';
  for (double nu : verify_frequencies(10, 1.0, 250.0, 20240607)) {
    const ResidualReport r =
        residual_check(cfg.model, p, dp, laplace_at_hz(nu), p.ellk);
    out << "residual nu_hz=" << format_g12(nu) << " ode=" << sci(r.ode_residual)
        << " bc=" << sci(r.bc_residual)
        << " interface=" << sci(r.interface_residual) << ' '
        << verdict(r.worst() <= kResidualTol) << '\n';
  }
  if (cfg.model == ModelKind::Timoshenko) {
    const double dev = h2_consistency(p, dp, laplace_at_hz(15.0), p.ellk);
    out << "h2_consistency nu_hz=15 deviation=" << sci(dev) << ' '
        << verdict(dev <= kH2Tol) << '\n';
  }
  for (OutputKind kind : {OutputKind::Displacement, OutputKind::Curvature}) {
    const cd s = laplace_at_hz(7.0);
    const cd h = transfer(cfg.model, p, dp, s, p.ellk, kind);
    const cd f = fd_bvp_oracle(cfg.model, p, dp, s, p.ellk, kind, kFdNodes);
    const double rel = std::abs(h - f) / std::abs(h);
    out << "fd_oracle nu_hz=7 output=" << to_string(kind) << " n=" << kFdNodes
        << " relative=" << sci(rel) << ' ' << verdict(rel <= kFdTol) << '\n';
  }
  out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

}  // namespace beamtf::cli
