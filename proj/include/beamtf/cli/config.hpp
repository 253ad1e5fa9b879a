#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "beamtf/beam_model.hpp"
#include "beamtf/response.hpp"

namespace beamtf::cli {

/// Everything one CLI invocation needs, in SI units.
struct RunConfig {
  BeamParams beam;
  ModelKind model = ModelKind::Timoshenko;
  OutputKind kind = OutputKind::Displacement;
  SweepSpec sweep;
  double peak_lo = 1.0;
  double peak_hi = 50.0;
  int coarse_n = 5000;
  std::vector<double> damping;  ///< comparison list; defaults to {beam.d}
  std::string out_path;         ///< empty: standard output
};

/// Raw `key = value [unit]` entries in file order, before conversion.
struct ConfigEntry {
  std::string value;  ///< text after '=', comments stripped
  std::string source; ///< "file:line" or "--set"
};
using ConfigEntries = std::map<std::string, ConfigEntry>;

/// Parses the text format:
///   # comment
///   key = value [unit]
/// Throws Error(Parse) naming the line for malformed lines, unknown keys and
/// duplicates.
ConfigEntries parse_entries(std::string_view text,
                            std::string_view source = "<config>");

/// Applies one `key=value [unit]` override, replacing any existing entry.
void apply_set(ConfigEntries& entries, std::string_view assignment);

/// Converts entries to a RunConfig. Missing keys keep their defaults, ellk
/// defaults to ell0. Does not validate; see check_config.
RunConfig build_config(const ConfigEntries& entries);

/// Throws Error(Validation) listing every violated invariant.
void check_config(const RunConfig& cfg);

/// The shipped reference configuration (aluminium beam, mixed units).
std::string_view default_config_text();

ConfigEntries read_entries(const std::filesystem::path& path);

/// read_entries + build_config + check_config.
RunConfig load_config(const std::filesystem::path& path);

/// Parses "D[,D...]" in N s/m.
std::vector<double> parse_damping_list(std::string_view text);

/// Parses "LO:HI" in Hz.
std::pair<double, double> parse_range(std::string_view text);

ModelKind parse_model(std::string_view text);
OutputKind parse_output(std::string_view text);

}  // namespace beamtf::cli
