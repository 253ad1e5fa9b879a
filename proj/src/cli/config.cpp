#include "beamtf/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "beamtf/cli/units.hpp"
#include "beamtf/errors.hpp"

namespace beamtf::cli {

namespace {

enum class ValueType { Quantity, Integer, Word, QuantityList, Path };

struct KeySpec {
  std::string_view key;
  ValueType type;
  Dimension dim;
};

constexpr KeySpec kKeys[] = {
    {"ell", ValueType::Quantity, Dimension::Length},
    {"ell0", ValueType::Quantity, Dimension::Length},
    {"ellk", ValueType::Quantity, Dimension::Length},
    {"rho0", ValueType::Quantity, Dimension::Density},
    {"A", ValueType::Quantity, Dimension::Area},
    {"E", ValueType::Quantity, Dimension::Pressure},
    {"G", ValueType::Quantity, Dimension::Pressure},
    {"I", ValueType::Quantity, Dimension::SecondMoment},
    {"k_shear", ValueType::Quantity, Dimension::Dimensionless},
    {"m", ValueType::Quantity, Dimension::Mass},
    {"kappa", ValueType::Quantity, Dimension::Stiffness},
    {"d", ValueType::Quantity, Dimension::Damping},
    {"model", ValueType::Word, Dimension::Dimensionless},
    {"output", ValueType::Word, Dimension::Dimensionless},
    {"nu_min", ValueType::Quantity, Dimension::Frequency},
    {"nu_max", ValueType::Quantity, Dimension::Frequency},
    {"points", ValueType::Integer, Dimension::Dimensionless},
    {"spacing", ValueType::Word, Dimension::Dimensionless},
    {"peak_lo", ValueType::Quantity, Dimension::Frequency},
    {"peak_hi", ValueType::Quantity, Dimension::Frequency},
    {"coarse_n", ValueType::Integer, Dimension::Dimensionless},
    {"damping", ValueType::QuantityList, Dimension::Damping},
    {"out", ValueType::Path, Dimension::Dimensionless},
};

const KeySpec* find_key(std::string_view key) {
  for (const auto& k : kKeys)
    if (k.key == key) return &k;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "<number> [unit]"
double quantity(std::string_view text, Dimension dim, const std::string& where) {
  text = trim(text);
  const auto sp = text.find_first_of(" \t");
  const std::string_view num = text.substr(0, sp);
  const std::string_view unit =
      sp == std::string_view::npos ? std::string_view{} : trim(text.substr(sp));
  const auto v = to_double(num);
  if (!v) parse_error(where, "expected a number, got '" + std::string(num) + "'");
  try {
    return to_si(*v, unit, dim);
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
}

// "<n>[, <n>...] [unit]"
std::vector<double> quantity_list(std::string_view text, Dimension dim,
                                  const std::string& where) {
  text = trim(text);
  std::string_view unit;
  const auto sp = text.find_last_of(" \t");
  if (sp != std::string_view::npos) {
    const std::string_view tail = trim(text.substr(sp));
    if (!to_double(tail) && tail.find(',') == std::string_view::npos) {
      unit = tail;
      text = trim(text.substr(0, sp));
    }
  }
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string_view item =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    const auto v = to_double(item);
    if (!v) parse_error(where, "expected a number, got '" + std::string(item) + "'");
    try {
      out.push_back(to_si(*v, unit, dim));
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

int integer(std::string_view text, const std::string& where) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error(where, "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

void add_entry(ConfigEntries& entries, std::string_view line,
               const std::string& where, bool replace) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) parse_error(where, "expected 'key = value'");
  const std::string key(trim(line.substr(0, eq)));
  const std::string_view value = trim(line.substr(eq + 1));
  if (key.empty()) parse_error(where, "missing key");
  if (!find_key(key)) parse_error(where, "unknown key '" + key + "'");
  if (value.empty()) parse_error(where, "key '" + key + "' has no value");
  if (!replace && entries.count(key)) {
    parse_error(where, "duplicate key '" + key + "' (first set at " +
                           entries[key].source + ")");
  }
  entries[key] = {std::string(value), where};
}

}  // namespace

ConfigEntries parse_entries(std::string_view text, std::string_view source) {
  ConfigEntries entries;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    add_entry(entries, line,
              std::string(source) + ":" + std::to_string(line_no), false);
  }
  return entries;
}

void apply_set(ConfigEntries& entries, std::string_view assignment) {
  add_entry(entries, trim(assignment), "--set " + std::string(assignment), true);
}

ModelKind parse_model(std::string_view text) {
  if (text == "timoshenko") return ModelKind::Timoshenko;
  if (text == "euler") return ModelKind::EulerBernoulli;
  throw Error(ErrorKind::Parse, "model must be 'timoshenko' or 'euler', got '" +
                                    std::string(text) + "'");
}

OutputKind parse_output(std::string_view text) {
  if (text == "displacement") return OutputKind::Displacement;
  if (text == "curvature") return OutputKind::Curvature;
  throw Error(ErrorKind::Parse,
              "output must be 'displacement' or 'curvature', got '" +
                  std::string(text) + "'");
}

std::vector<double> parse_damping_list(std::string_view text) {
  return quantity_list(text, Dimension::Damping, "--damping");
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "--range: expected LO:HI, got '" +
                                      std::string(text) + "'");
  }
  return {quantity(text.substr(0, colon), Dimension::Frequency, "--range"),
          quantity(text.substr(colon + 1), Dimension::Frequency, "--range")};
}

RunConfig build_config(const ConfigEntries& entries) {
  RunConfig cfg;
  bool ellk_set = false;
  for (const auto& [key, entry] : entries) {
    const KeySpec& spec = *find_key(key);
    const std::string where = entry.source + ": " + key;
    const std::string& v = entry.value;
    auto q = [&] { return quantity(v, spec.dim, where); };
    BeamParams& b = cfg.beam;
    if (key == "ell") b.ell = q();
    else if (key == "ell0") b.ell0 = q();
    else if (key == "ellk") { b.ellk = q(); ellk_set = true; }
    else if (key == "rho0") b.rho0 = q();
    else if (key == "A") b.A = q();
    else if (key == "E") b.E = q();
    else if (key == "G") b.G = q();
    else if (key == "I") b.I = q();
    else if (key == "k_shear") b.k_shear = q();
    else if (key == "m") b.m_att = q();
    else if (key == "kappa") b.kappa = q();
    else if (key == "d") b.d = q();
    else if (key == "nu_min") cfg.sweep.nu_min = q();
    else if (key == "nu_max") cfg.sweep.nu_max = q();
    else if (key == "peak_lo") cfg.peak_lo = q();
    else if (key == "peak_hi") cfg.peak_hi = q();
    else if (key == "points") cfg.sweep.n_points = integer(v, where);
    else if (key == "coarse_n") cfg.coarse_n = integer(v, where);
    else if (key == "damping") cfg.damping = quantity_list(v, spec.dim, where);
    else if (key == "out") cfg.out_path = v;
    else if (key == "model") {
      try { cfg.model = parse_model(v); } catch (const Error& e) { parse_error(where, e.what()); }
    } else if (key == "output") {
      try { cfg.kind = parse_output(v); } catch (const Error& e) { parse_error(where, e.what()); }
    } else if (key == "spacing") {
      if (v == "linear") cfg.sweep.spacing = Spacing::Linear;
      else if (v == "log") cfg.sweep.spacing = Spacing::Log;
      else parse_error(where, "spacing must be 'linear' or 'log'");
    }
  }
  if (!ellk_set) cfg.beam.ellk = cfg.beam.ell0;
  if (cfg.damping.empty()) cfg.damping = {cfg.beam.d};
  cfg.sweep.model = cfg.model;
  cfg.sweep.kind = cfg.kind;
  return cfg;
}

void check_config(const RunConfig& cfg) {
  std::vector<Violation> v = validate(cfg.beam);
  for (double d : cfg.damping) {
    if (!(d >= 0.0)) v.push_back({"damping", "every damping value must be >= 0"});
  }
  if (cfg.damping.empty()) v.push_back({"damping", "list must not be empty"});
  if (!(cfg.peak_lo < cfg.peak_hi)) v.push_back({"peak_lo", "must be below peak_hi"});
  if (cfg.coarse_n < 3) v.push_back({"coarse_n", "must be at least 3"});
  if (cfg.sweep.n_points < 2) v.push_back({"points", "must be at least 2"});
  if (!(cfg.sweep.nu_min < cfg.sweep.nu_max)) {
    v.push_back({"nu_min", "must be below nu_max"});
  }
  if (v.empty()) return;
  std::ostringstream msg;
  msg << "invalid configuration:";
  for (const auto& x : v) msg << "\n  " << x.field << ": " << x.message;
  throw Error(ErrorKind::Validation, msg.str());
}

ConfigEntries read_entries(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Parse, "cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_entries(buf.str(), path.string());
}

RunConfig load_config(const std::filesystem::path& path) {
  RunConfig cfg = build_config(read_entries(path));
  check_config(cfg);
  return cfg;
}

}  // namespace beamtf::cli
