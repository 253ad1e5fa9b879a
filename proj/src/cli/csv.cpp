#include "beamtf/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "beamtf/errors.hpp"

namespace beamtf::cli {

std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sweep_row(const TransferSample& s) {
  std::string row;
  for (double v : {s.nu, s.h.real(), s.h.imag(), s.mag, s.mag_db, s.phase}) {
    row += format_g12(v);
    row += ',';
  }
  row += to_string(s.status);
  return row;
}

std::string sweep_csv(const std::vector<TransferSample>& samples) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& s : samples) {
    out += sweep_row(s);
    out += '\n';
  }
  return out;
}

std::string peaks_csv(const std::vector<PeakRow>& rows, bool with_d) {
  std::string out = with_d ? "d,mode,nu_hz,mag\n" : "mode,nu_hz,mag\n";
  for (const auto& r : rows) {
    if (with_d) out += format_g12(r.d.value_or(0.0)) + ",";
    out += std::to_string(r.mode) + "," + format_g12(r.nu_hz) + "," +
           format_g12(r.mag) + "\n";
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw Error(ErrorKind::Parse, "sweep CSV: unexpected header");
  }
  std::vector<SweepRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw Error(ErrorKind::Parse,
                  "sweep CSV line " + std::to_string(line_no) + ": expected 7 fields");
    }
    double v[6];
    for (int i = 0; i < 6; ++i) v[i] = std::strtod(cells[i].c_str(), nullptr);
    out.push_back({v[0], v[1], v[2], v[3], v[4], v[5], cells[6]});
  }
  return out;
}

}  // namespace beamtf::cli
