#pragma once

namespace beamtf {

/// Numerical guard settings shared by the Timoshenko and Euler-Bernoulli
/// pipelines.
struct NumericPolicy {
  /// Frequencies with |s| < 2*pi*min_frequency_hz are rejected.
  double min_frequency_hz = 1e-3;
  /// |lambda x| below which sinh/cosh combinations switch to Taylor series.
  double series_threshold = 1e-3;
  /// Largest admissible |Re(lambda) x| before exp() overflows.
  double overflow_exponent = 700.0;
  /// |a^2 - b| < tol * max(|a|^2, |b|) counts as a repeated root.
  double repeated_root_tol = 1e-10;
  /// Multiplicative nudge s -> s (1 + nudge) applied at a repeated root.
  double repeated_root_nudge = 1e-9;
  /// Condition estimate above which an interface system is NearSingular.
  double max_condition = 1e12;
};

}  // namespace beamtf
