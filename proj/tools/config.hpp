#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magsky/device.hpp"
#include "magsky/scenarios.hpp"

namespace magsky::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string name;  // "R_K" or "d_K"
  double min = 0.0;
  double max = 0.0;
  int count = 1;
  bool log_scale = false;

  std::vector<double> values() const;
};

/// Fully-validated run configuration with defaults filled in. Device-level
/// inputs are SI; scenario-level model parameters are dimensionless in
/// lambda_bar units. Exactly one of {device, model} may supply couplings.
struct RunConfig {
  std::string scenario;  // jc, jc-squeezed, two-skyrmion-full,
                         // two-skyrmion-reduced, sky-sq-full, sky-sq-reduced
  std::string initial_state;
  int n_max = 10;
  double rel_tol = 1e-8;
  double t_max = 20.0;  // units 1/lambda_bar
  int n_points = 400;

  std::optional<DeviceParams> device;
  double temperature = 0.1;    // [K], feasibility report
  double gamma_K_2pi = 1e6;    // gamma_K / 2pi [Hz], cooperativity default
  double gamma_Sky_2pi = 1e6;  // gamma_Sky / 2pi [Hz]
  std::optional<double> A0;    // [rad/s], qubit spectrum inputs
  std::optional<double> B0;

  std::vector<SweepAxis> sweep;
  std::vector<double> kd_ratios;       // K_d / Delta_tilde_K table
  double delta_q_over_lambda = 100.0;  // RWA-validity input for squeeze table

  std::optional<JCParams> jc;
  std::optional<std::pair<double, double>> squeeze_drive;  // (K_d, Delta_tilde_K)
  std::optional<TwoSkyrmionParams> two_skyrmion;
  std::optional<SkyrmionSQParams> sky_sq;

  std::string out_path;

  nlohmann::json canonical;  // defaulted config, hashed for provenance
  std::uint64_t hash() const;
};

/// Parses and validates a JSON config. Unknown keys are rejected by name;
/// physical invariant violations raise ConfigError.
RunConfig parse_config(const nlohmann::json& j);
RunConfig parse_config_file(const std::string& path);

/// Named figure presets (fig2a..fig2d, fig3a, fig3b, fig4a, fig4b,
/// paper-feasibility), expanded to full configs.
std::vector<std::string> preset_names();
nlohmann::json preset_json(const std::string& name);
RunConfig preset_config(const std::string& name);

}  // namespace magsky::cli
