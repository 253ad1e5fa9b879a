#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beamtf/response.hpp"

namespace beamtf::cli {

inline constexpr std::string_view kSweepHeader =
    "nu_hz,re_h,im_h,mag,mag_db,phase_rad,status";

/// printf "%.12g" with the C locale; every NaN prints as "nan".
std::string format_g12(double v);

std::string sweep_row(const TransferSample& s);
/// Header plus one LF-terminated row per sample.
std::string sweep_csv(const std::vector<TransferSample>& samples);

struct PeakRow {
  std::optional<double> d;  ///< present in damping-comparison runs
  int mode = 0;
  double nu_hz = 0.0;
  double mag = 0.0;
};

std::string peaks_csv(const std::vector<PeakRow>& rows, bool with_d);

struct SweepRecord {
  double nu_hz, re_h, im_h, mag, mag_db, phase_rad;
  std::string status;
};

/// Reads back sweep_csv output. Throws Error(Parse) on schema mismatch.
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

}  // namespace beamtf::cli
