// beamtf: transfer functions of a pinned beam with a spring-mass-damper
// attachment. Subcommands eval, sweep, peaks, verify.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "beamtf/cli/commands.hpp"
#include "beamtf/cli/config.hpp"

using namespace beamtf;
using namespace beamtf::cli;

int main(int argc, char** argv) {
  CLI::App app{"Frequency response of a pinned Timoshenko / Euler-Bernoulli "
               "beam with a spring-mass-damper attachment"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> model, output, range, damping, out_path;
  std::optional<double> nu;
  std::optional<int> points;
  std::vector<std::string> sets;

  app.add_option("--config", config_path,
                 "config file (default: built-in reference beam)");
  app.add_option("--model", model, "timoshenko | euler");
  app.add_option("--output", output, "displacement | curvature");
  app.add_option("--range", range, "frequency range LO:HI in Hz");
  app.add_option("--points", points,
                 "sweep points (sweep) or coarse grid size (peaks)");
  app.add_option("--damping", damping, "damping D[,D...] in N*s/m");
  app.add_option("--out", out_path, "output file");
  app.add_option("--set", sets, "override a config entry, key=value [unit]")
      ->allow_extra_args(false);

  auto* eval = app.add_subcommand("eval", "evaluate H at one frequency");
  eval->add_option("--nu", nu, "frequency in Hz")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "frequency sweep as CSV");
  auto* peaks = app.add_subcommand("peaks", "local maxima of |H|");
  auto* verify = app.add_subcommand("verify", "residual and oracle checks");
  for (auto* sub : {eval, sweep_cmd, peaks, verify}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ConfigEntries entries = config_path.empty()
                                ? parse_entries(default_config_text(), "<default>")
                                : read_entries(config_path);
    for (const auto& s : sets) apply_set(entries, s);
    RunConfig cfg = build_config(entries);

    if (model) cfg.model = cfg.sweep.model = parse_model(*model);
    if (output) cfg.kind = cfg.sweep.kind = parse_output(*output);
    if (damping) cfg.damping = parse_damping_list(*damping);
    if (out_path) cfg.out_path = *out_path;
    if (range) {
      const auto [lo, hi] = parse_range(*range);
      if (peaks->parsed()) {
        cfg.peak_lo = lo;
        cfg.peak_hi = hi;
      } else {
        cfg.sweep.nu_min = lo;
        cfg.sweep.nu_max = hi;
      }
    }
    if (points) {
      if (peaks->parsed()) cfg.coarse_n = *points;
      else cfg.sweep.n_points = *points;
    }
    check_config(cfg);

    if (eval->parsed()) return cmd_eval(cfg, *nu, std::cout);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, std::cout, std::cerr);
    if (peaks->parsed()) return cmd_peaks(cfg, std::cout, std::cerr);
    return cmd_verify(cfg, std::cout);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
