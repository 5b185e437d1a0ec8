#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "runner.hpp"

namespace {

using magsky::cli::ConfigError;
using magsky::cli::RunConfig;

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string out = "-";
  std::string scenario_override;
  int threads = 1;
  std::optional<int> nmax;
  std::optional<double> rel_tol;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool dynamics = false) {
  cmd->add_option("--config", o.config_path, "JSON configuration file");
  cmd->add_option("--preset", o.preset, "named figure preset");
  cmd->add_option("--out", o.out, "output path ('-' = stdout)");
  cmd->add_option("--threads", o.threads, "sweep worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nmax", o.nmax, "boson truncation override");
  cmd->add_option("--rel-tol", o.rel_tol, "integrator tolerance override");
  if (dynamics) {
    cmd->add_option("--scenario", o.scenario_override,
                    "override the configured scenario (e.g. run the full "
                    "variant of a reduced preset for overlay)");
  }
}

RunConfig load(const CommonOpts& o) {
  if (o.config_path.empty() == o.preset.empty()) {
    throw ConfigError("exactly one of --config / --preset is required");
  }
  nlohmann::json j = o.preset.empty()
                         ? [&] {
                             std::ifstream in(o.config_path);
                             if (!in) {
                               throw ConfigError("cannot open config file: " +
                                                 o.config_path);
                             }
                             nlohmann::json parsed;
                             try {
                               in >> parsed;
                             } catch (const std::exception& e) {
                               throw ConfigError("config is not valid JSON: " +
                                                 std::string(e.what()));
                             }
                             return parsed;
                           }()
                         : magsky::cli::preset_json(o.preset);
  if (!o.scenario_override.empty()) j["scenario"] = o.scenario_override;
  if (o.nmax) j["n_max"] = *o.nmax;
  if (o.rel_tol) j["rel_tol"] = *o.rel_tol;
  RunConfig cfg = magsky::cli::parse_config(j);
  return cfg;
}

std::string out_path(const CommonOpts& o, const RunConfig& cfg) {
  if (o.out != "-") return o.out;
  return cfg.out_path.empty() ? "-" : cfg.out_path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnon-skyrmion hybrid system simulator"};
  app.require_subcommand(1);

  CommonOpts map_o, dyn_o, feas_o, sq_o;
  auto* cmd_map = app.add_subcommand(
      "coupling-map", "coupling strength and cooperativity over (R_K, d_K)");
  add_common(cmd_map, map_o);
  auto* cmd_dyn =
      app.add_subcommand("dynamics", "time evolution of a named scenario");
  add_common(cmd_dyn, dyn_o, /*dynamics=*/true);
  auto* cmd_feas =
      app.add_subcommand("feasibility", "device feasibility report (JSON)");
  add_common(cmd_feas, feas_o);
  auto* cmd_sq = app.add_subcommand(
      "squeeze-sweep", "squeezing-enhanced coupling over a device sweep");
  add_common(cmd_sq, sq_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_map->parsed()) {
      const auto cfg = load(map_o);
      return magsky::cli::run_coupling_map(cfg, out_path(map_o, cfg),
                                           map_o.threads);
    }
    if (cmd_dyn->parsed()) {
      const auto cfg = load(dyn_o);
      return magsky::cli::run_dynamics(cfg, out_path(dyn_o, cfg));
    }
    if (cmd_feas->parsed()) {
      const auto cfg = load(feas_o);
      return magsky::cli::run_feasibility(cfg, out_path(feas_o, cfg));
    }
    if (cmd_sq->parsed()) {
      const auto cfg = load(sq_o);
      return magsky::cli::run_squeeze_sweep(cfg, out_path(sq_o, cfg),
                                            sq_o.threads);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
