#include "beamtf/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "beamtf/errors.hpp"
#include "beamtf/transfer.hpp"

namespace beamtf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SampleStatus status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return SampleStatus::Overflow;
    case ErrorKind::DegenerateFrequency: return SampleStatus::Degenerate;
    default: return SampleStatus::NearSingular;
  }
}

}  // namespace

std::string_view to_string(SampleStatus status) noexcept {
  switch (status) {
    case SampleStatus::Ok: return "ok";
    case SampleStatus::Perturbed: return "perturbed";
    case SampleStatus::NearSingular: return "near_singular";
    case SampleStatus::Overflow: return "overflow";
    case SampleStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

void check_spec(const SweepSpec& spec, const NumericPolicy& policy) {
  std::ostringstream msg;
  if (!(spec.nu_min >= policy.min_frequency_hz)) {
    msg << "sweep lower bound " << spec.nu_min << " Hz is below the floor "
        << policy.min_frequency_hz << " Hz";
  } else if (!(spec.nu_min < spec.nu_max) || !std::isfinite(spec.nu_max)) {
    msg << "sweep range must satisfy nu_min < nu_max";
  } else if (spec.n_points < 2) {
    msg << "sweep needs at least 2 points";
  } else {
    return;
  }
  throw Error(ErrorKind::InvalidArgument, msg.str());
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  const int n = spec.n_points;
  std::vector<double> nu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    if (spec.spacing == Spacing::Linear) {
      nu[i] = spec.nu_min + t * (spec.nu_max - spec.nu_min);
    } else {
      const double l0 = std::log(spec.nu_min), l1 = std::log(spec.nu_max);
      nu[i] = std::exp(l0 + t * (l1 - l0));
    }
  }
  nu.front() = spec.nu_min;
  nu.back() = spec.nu_max;
  return nu;
}

TransferSample sample_at(ModelKind model, OutputKind kind, const BeamParams& p,
                         const DerivedParams& dp, double ellk, double nu,
                         const NumericPolicy& policy) {
  TransferSample out;
  out.nu = nu;
  try {
    const TransferEvaluation ev =
        evaluate_transfer(model, p, dp, laplace_at_hz(nu), ellk, kind, policy);
    out.h = ev.h;
    out.mag = std::abs(ev.h);
    out.mag_db = 20.0 * std::log10(out.mag);
    out.phase = std::arg(ev.h);
    if (out.phase == -std::numbers::pi) out.phase = std::numbers::pi;
    out.status = ev.perturbed ? SampleStatus::Perturbed : SampleStatus::Ok;
  } catch (const Error& e) {
    out.h = {kNaN, kNaN};
    out.mag = out.mag_db = out.phase = kNaN;
    out.status = status_of(e.kind());
  }
  return out;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<TransferSample> sweep(const SweepSpec& spec, const BeamParams& p,
                                  const DerivedParams& dp, double ellk,
                                  const NumericPolicy& policy,
                                  unsigned threads) {
  check_spec(spec, policy);
  const std::vector<double> nu = sweep_grid(spec);
  std::vector<TransferSample> out(nu.size());
  parallel_for(nu.size(), threads, [&](std::size_t i) {
    out[i] = sample_at(spec.model, spec.kind, p, dp, ellk, nu[i], policy);
  });
  return out;
}

GoldenResult golden_section_maximize(const std::function<double(double)>& f,
                                     double lo, double hi, double tol,
                                     int max_iter) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > tol && it < max_iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
    ++it;
  }
  return fc >= fd ? GoldenResult{c, fc, b - a <= tol}
                  : GoldenResult{d, fd, b - a <= tol};
}

std::vector<ModalPeak> find_peaks(ModelKind model, OutputKind kind,
                                  const BeamParams& p, const DerivedParams& dp,
                                  double ellk, double nu_lo, double nu_hi,
                                  int coarse_n, const NumericPolicy& policy,
                                  unsigned threads) {
  SweepSpec spec{model, kind, nu_lo, nu_hi, coarse_n, Spacing::Linear};
  check_spec(spec, policy);
  const std::vector<double> nu = sweep_grid(spec);
  std::vector<double> mag(nu.size());
  parallel_for(nu.size(), threads, [&](std::size_t i) {
    mag[i] = sample_at(model, kind, p, dp, ellk, nu[i], policy).mag;
  });

  const auto magnitude = [&](double x) {
    const double m = sample_at(model, kind, p, dp, ellk, x, policy).mag;
    return std::isfinite(m) ? m : -std::numeric_limits<double>::infinity();
  };

  std::vector<std::size_t> brackets;
  for (std::size_t i = 1; i + 1 < nu.size(); ++i) {
    if (std::isfinite(mag[i - 1]) && std::isfinite(mag[i]) &&
        std::isfinite(mag[i + 1]) && mag[i] >= mag[i - 1] &&
        mag[i] > mag[i + 1]) {
      brackets.push_back(i);
    }
  }
  if (brackets.empty()) {
    std::ostringstream msg;
    msg << "no local maximum of |H| in [" << nu_lo << ", " << nu_hi << "] Hz";
    throw Error(ErrorKind::EmptyRange, msg.str());
  }

  std::vector<ModalPeak> peaks(brackets.size());
  parallel_for(brackets.size(), threads, [&](std::size_t k) {
    const std::size_t i = brackets[k];
    const GoldenResult g =
        golden_section_maximize(magnitude, nu[i - 1], nu[i + 1], 1e-7);
    peaks[k] = g.fx >= mag[i] ? ModalPeak{g.x, g.fx, g.converged}
                              : ModalPeak{nu[i], mag[i], false};
  });
  return peaks;
}

}  // namespace beamtf
