#pragma once

#include <ostream>
#include <vector>

#include "beamtf/cli/config.hpp"
#include "beamtf/errors.hpp"

namespace beamtf::cli {

/// 0 success, 1 validation or verification failure, 2 numeric guard.
int exit_code_for(ErrorKind kind) noexcept;

/// One sample at nu as a single `key=value` line. Numeric guards throw.
int cmd_eval(const RunConfig& cfg, double nu, std::ostream& out);

/// Sweep CSV to cfg.out_path, or to `out` when the path is empty.
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Peak table on `out`; also written to cfg.out_path when set. An empty
/// range is a warning, not an error.
int cmd_peaks(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Residual, consistency and finite-difference checks at fixed
/// pseudo-random frequencies; returns 1 if any threshold is exceeded.
int cmd_verify(const RunConfig& cfg, std::ostream& out);

/// The frequencies cmd_verify samples: n values in [lo, hi] from a fixed
/// seed, identical on every platform.
std::vector<double> verify_frequencies(int n, double lo, double hi,
                                       unsigned long long seed);

}  // namespace beamtf::cli
