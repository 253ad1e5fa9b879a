#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "beamtf/beam_model.hpp"
#include "beamtf/numeric_policy.hpp"

namespace beamtf {

enum class Spacing { Linear, Log };

struct SweepSpec {
  ModelKind model = ModelKind::Timoshenko;
  OutputKind kind = OutputKind::Displacement;
  double nu_min = 1.0;
  double nu_max = 250.0;
  int n_points = 2048;
  Spacing spacing = Spacing::Linear;
};

/// Outcome of one sample; guarded samples carry NaN values.
enum class SampleStatus { Ok, Perturbed, NearSingular, Overflow, Degenerate };

std::string_view to_string(SampleStatus status) noexcept;

struct TransferSample {
  double nu = 0.0;
  cd h;
  double mag = 0.0;
  double mag_db = 0.0;
  double phase = 0.0;  ///< principal value in (-pi, pi]
  SampleStatus status = SampleStatus::Ok;
};

/// Throws InvalidArgument on an inadmissible spec.
void check_spec(const SweepSpec& spec, const NumericPolicy& policy = {});

/// Grid of the spec, ascending; endpoints are reproduced exactly.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// One sample at nu; numeric guards become status markers.
TransferSample sample_at(ModelKind model, OutputKind kind, const BeamParams& p,
                         const DerivedParams& dp, double ellk, double nu,
                         const NumericPolicy& policy = {});

/// Samples ascending in nu. threads == 0 picks the hardware concurrency;
/// the result does not depend on it.
std::vector<TransferSample> sweep(const SweepSpec& spec, const BeamParams& p,
                                  const DerivedParams& dp, double ellk,
                                  const NumericPolicy& policy = {},
                                  unsigned threads = 0);

struct ModalPeak {
  double nu_peak = 0.0;
  double mag_peak = 0.0;
  bool refined = false;
};

struct GoldenResult {
  double x;
  double fx;
  bool converged;
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is narrower than tol.
/// Every evaluation point lies inside [lo, hi].
GoldenResult golden_section_maximize(const std::function<double(double)>& f,
                                     double lo, double hi, double tol,
                                     int max_iter = 200);

/// Local maxima of |H(2 pi i nu)| on [nu_lo, nu_hi]: coarse scan for slope
/// sign changes, then golden-section refinement to 1e-7 Hz. Throws
/// EmptyRange when the range holds no interior maximum.
std::vector<ModalPeak> find_peaks(ModelKind model, OutputKind kind,
                                  const BeamParams& p, const DerivedParams& dp,
                                  double ellk, double nu_lo, double nu_hi,
                                  int coarse_n = 5000,
                                  const NumericPolicy& policy = {},
                                  unsigned threads = 0);

/// Runs fn(i) for i in [0, n) on up to `threads` workers with a fixed
/// partition; fn must only write to slot i of its output.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace beamtf
