#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace magsky::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
    }
  }
}

double get_num(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError("key \"" + key + "\" must be a number");
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) {
    throw ConfigError("key \"" + key + "\" must be an integer");
  }
  return j.at(key).get<int>();
}

bool get_bool(const json& j, const std::string& key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError("key \"" + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

std::string get_str(const json& j, const std::string& key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError("key \"" + key + "\" must be a string");
  return j.at(key).get<std::string>();
}

DeviceParams parse_device(const json& d, RunConfig& cfg) {
  reject_unknown_keys(d,
                      {"R_K", "d_K", "M_s", "B_K", "a", "S_bar", "R_s", "w",
                       "T", "gamma_K_over_2pi", "gamma_Sky_over_2pi",
                       "A0_over_2pi", "B0_over_2pi"},
                      "device");
  DeviceParams dev{};
  dev.R_K = get_num(d, "R_K", 100e-9);
  dev.d_K = get_num(d, "d_K", 10e-9);
  dev.M_s = get_num(d, "M_s", 587e3);
  dev.B_K = get_num(d, "B_K", 0.5);
  dev.a = get_num(d, "a", 0.5e-9);
  dev.S_bar = get_num(d, "S_bar", 20.0);
  dev.profile.R_s = get_num(d, "R_s", 6e-9);
  dev.profile.w = get_num(d, "w", dev.profile.R_s / 2.0);
  cfg.temperature = get_num(d, "T", 0.1);
  cfg.gamma_K_2pi = get_num(d, "gamma_K_over_2pi", 1e6);
  cfg.gamma_Sky_2pi = get_num(d, "gamma_Sky_over_2pi", 1e6);
  if (d.contains("A0_over_2pi")) cfg.A0 = d.at("A0_over_2pi").get<double>() * constants::two_pi;
  if (d.contains("B0_over_2pi")) cfg.B0 = d.at("B0_over_2pi").get<double>() * constants::two_pi;
  if (cfg.temperature < 0) throw ConfigError("device.T must be >= 0");
  if (cfg.gamma_K_2pi <= 0 || cfg.gamma_Sky_2pi <= 0) {
    throw ConfigError("device dissipation rates must be positive");
  }
  try {
    dev.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("device: ") + e.what());
  }
  return dev;
}

void parse_model(const json& m, RunConfig& cfg) {
  if (cfg.scenario == "jc" || cfg.scenario == "jc-squeezed") {
    reject_unknown_keys(m,
                        {"omega_q", "omega_K", "lambda_bar",
                         "include_counter_rotating", "lambda_xy", "Delta_q",
                         "K_d", "Delta_tilde_K"},
                        "model");
    JCParams p;
    p.omega_q = get_num(m, cfg.scenario == "jc" ? "omega_q" : "Delta_q",
                        get_num(m, "omega_q", 0.0));
    p.omega_K = get_num(m, "omega_K", 0.0);
    p.lambda_bar = get_num(m, "lambda_bar", 1.0);
    p.include_counter_rotating = get_bool(m, "include_counter_rotating", false);
    p.lambda_xy = get_num(m, "lambda_xy", 0.0);
    if (p.lambda_bar < 0) throw ConfigError("model.lambda_bar must be >= 0");
    cfg.jc = p;
    if (cfg.scenario == "jc-squeezed") {
      const double kd = get_num(m, "K_d", 0.0);
      const double dk = get_num(m, "Delta_tilde_K", 1.0);
      if (std::abs(kd) >= std::abs(dk)) {
        throw ConfigError("model: |K_d| must be below |Delta_tilde_K|");
      }
      cfg.squeeze_drive = {kd, dk};
    }
  } else if (cfg.scenario == "two-skyrmion-full" ||
             cfg.scenario == "two-skyrmion-reduced") {
    reject_unknown_keys(m,
                        {"Omega_2", "Delta_q1", "Delta_K1", "lambda_bar",
                         "gamma_K", "W1", "W2", "G", "Gamma"},
                        "model");
    TwoSkyrmionParams p;
    p.Omega_2 = get_num(m, "Omega_2", 1.0);
    p.Delta_q1 = get_num(m, "Delta_q1", 1.0);
    p.Delta_K1 = get_num(m, "Delta_K1", 1.0);
    p.lambda_bar = get_num(m, "lambda_bar", 1.0);
    p.gamma_K = get_num(m, "gamma_K", 10.0);
    p.W1 = get_num(m, "W1", 0.0);
    p.W2 = get_num(m, "W2", 0.0);
    p.G = get_num(m, "G", 0.0);
    p.Gamma = get_num(m, "Gamma", -1.0);
    if (p.gamma_K <= 0) throw ConfigError("model.gamma_K must be positive");
    cfg.two_skyrmion = p;
  } else if (cfg.scenario == "sky-sq-full" || cfg.scenario == "sky-sq-reduced") {
    reject_unknown_keys(
        m, {"eta", "phi_e", "G_SS", "Gamma_SS", "lambda_bar", "gamma_K"},
        "model");
    SkyrmionSQParams p;
    p.eta = get_num(m, "eta", 1.0);
    p.phi_e = get_num(m, "phi_e", 0.0);
    p.G_SS = get_num(m, "G_SS", 0.0);
    p.Gamma_SS = get_num(m, "Gamma_SS", -1.0);
    p.lambda_bar = get_num(m, "lambda_bar", 1.0);
    p.gamma_K = get_num(m, "gamma_K", 10.0);
    if (p.gamma_K <= 0) throw ConfigError("model.gamma_K must be positive");
    if (p.eta < 0) throw ConfigError("model.eta must be >= 0");
    cfg.sky_sq = p;
  } else {
    throw ConfigError("model block present but scenario \"" + cfg.scenario +
                      "\" is not a dynamics scenario");
  }
}

json canonicalize(const RunConfig& cfg, const json& src) {
  json c = src;
  c["scenario"] = cfg.scenario;
  c["n_max"] = cfg.n_max;
  c["rel_tol"] = cfg.rel_tol;
  c["t_max"] = cfg.t_max;
  c["n_points"] = cfg.n_points;
  if (!cfg.initial_state.empty()) c["initial_state"] = cfg.initial_state;
  return c;
}

}  // namespace

std::vector<double> SweepAxis::values() const {
  std::vector<double> v;
  v.reserve(static_cast<size_t>(count));
  if (count == 1) {
    v.push_back(min);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    const double f = double(i) / double(count - 1);
    v.push_back(log_scale ? min * std::pow(max / min, f)
                          : min + f * (max - min));
  }
  return v;
}

std::uint64_t RunConfig::hash() const {
  const std::string s = canonical.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(j,
                      {"scenario", "initial_state", "n_max", "rel_tol", "t_max",
                       "n_points", "device", "model", "sweep", "squeeze", "out"},
                      "config");
  RunConfig cfg;
  cfg.scenario = get_str(j, "scenario", "");
  cfg.initial_state = get_str(j, "initial_state", "");
  cfg.n_max = get_int(j, "n_max", 10);
  cfg.rel_tol = get_num(j, "rel_tol", 1e-8);
  cfg.t_max = get_num(j, "t_max", 20.0);
  cfg.n_points = get_int(j, "n_points", 400);
  cfg.out_path = get_str(j, "out", "");

  if (cfg.n_max < 1) throw ConfigError("n_max must be >= 1");
  if (cfg.rel_tol < 1e-12 || cfg.rel_tol > 1e-4) {
    throw ConfigError("rel_tol must lie in [1e-12, 1e-4]");
  }
  if (cfg.n_points < 2) throw ConfigError("n_points must be >= 2");
  if (cfg.t_max <= 0) throw ConfigError("t_max must be positive");

  if (j.contains("device") && j.contains("model")) {
    throw ConfigError(
        "exactly one of {device, model} may supply couplings, not both");
  }
  if (j.contains("device")) cfg.device = parse_device(j.at("device"), cfg);
  if (j.contains("model")) parse_model(j.at("model"), cfg);

  if (j.contains("sweep")) {
    if (!j.at("sweep").is_array()) throw ConfigError("sweep must be an array");
    for (const auto& a : j.at("sweep")) {
      reject_unknown_keys(a, {"name", "min", "max", "count", "scale"}, "sweep axis");
      SweepAxis ax;
      ax.name = get_str(a, "name", "");
      if (ax.name != "R_K" && ax.name != "d_K") {
        throw ConfigError("sweep axis \"" + ax.name +
                          "\" does not reference an existing field");
      }
      ax.min = get_num(a, "min", 0.0);
      ax.max = get_num(a, "max", ax.min);
      ax.count = get_int(a, "count", 1);
      const std::string scale = get_str(a, "scale", "linear");
      if (scale != "linear" && scale != "log") {
        throw ConfigError("sweep scale must be \"linear\" or \"log\"");
      }
      ax.log_scale = (scale == "log");
      if (ax.min <= 0 || ax.max < ax.min || ax.count < 1) {
        throw ConfigError("sweep axis \"" + ax.name + "\" has invalid bounds");
      }
      cfg.sweep.push_back(ax);
    }
  }

  if (j.contains("squeeze")) {
    const auto& s = j.at("squeeze");
    reject_unknown_keys(s, {"kd_over_delta", "Delta_q_over_lambda"}, "squeeze");
    if (s.contains("kd_over_delta")) {
      for (const auto& v : s.at("kd_over_delta")) {
        const double r = v.get<double>();
        if (std::abs(r) >= 1.0) {
          throw ConfigError("squeeze.kd_over_delta entries must satisfy |x| < 1");
        }
        cfg.kd_ratios.push_back(r);
      }
    }
    cfg.delta_q_over_lambda = get_num(s, "Delta_q_over_lambda", 100.0);
  }

  if (!cfg.scenario.empty() && !cfg.jc && !cfg.two_skyrmion && !cfg.sky_sq) {
    // Scenario named without a model block: defaults by scenario id.
    parse_model(json::object(), cfg);
  }

  cfg.canonical = canonicalize(cfg, j);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(j);
}

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig2c", "fig2d", "fig3a",
          "fig3b", "fig4a", "fig4b", "paper-feasibility"};
}

json preset_json(const std::string& name) {
  const json device_defaults = {
      {"R_K", 100e-9}, {"d_K", 10e-9}, {"M_s", 587e3}, {"B_K", 0.5},
      {"S_bar", 20.0}, {"a", 0.5e-9},  {"R_s", 6e-9},  {"T", 0.1}};
  const json fig3_model = {{"Omega_2", 1.0},    {"Delta_q1", 1.0},
                           {"Delta_K1", 1.0},   {"lambda_bar", 1.0},
                           {"gamma_K", 10.0}};
  const json fig4_model = {{"eta", 1.0},
                           {"phi_e", constants::pi / 2.0},
                           {"G_SS", 1.0},
                           {"lambda_bar", 1.0},
                           {"gamma_K", 10.0}};
  if (name == "fig2a" || name == "fig2c") {
    return {{"device", device_defaults},
            {"sweep",
             {{{"name", "R_K"}, {"min", 50e-9}, {"max", 1e-6}, {"count", 40}},
              {{"name", "d_K"}, {"min", 5e-9}, {"max", 50e-9}, {"count", 16}}}}};
  }
  if (name == "fig2b") {
    return {{"device", device_defaults},
            {"sweep",
             {{{"name", "R_K"}, {"min", 50e-9}, {"max", 1e-6}, {"count", 60}}}}};
  }
  if (name == "fig2d") {
    return {{"device", device_defaults},
            {"sweep",
             {{{"name", "R_K"},
               {"min", 100e-9},
               {"max", 10e-6},
               {"count", 40},
               {"scale", "log"}}}},
            {"squeeze", {{"kd_over_delta", {0.0, 0.5, 0.8, 0.9, 0.95}}}}};
  }
  if (name == "fig3a" || name == "fig3b") {
    return {{"scenario", "two-skyrmion-reduced"},
            {"model", fig3_model},
            {"initial_state", name == "fig3a" ? "q1-excited" : "q2-excited"},
            {"t_max", 20.0},
            {"n_points", 400}};
  }
  if (name == "fig4a" || name == "fig4b") {
    return {{"scenario", "sky-sq-reduced"},
            {"model", fig4_model},
            {"initial_state", name == "fig4a" ? "sky-excited" : "sq-excited"},
            {"t_max", 20.0},
            {"n_points", 400}};
  }
  if (name == "paper-feasibility") {
    return {{"device", device_defaults},
            {"squeeze", {{"kd_over_delta", {0.0, 0.5, 0.8, 0.9}}}}};
  }
  throw ConfigError("unknown preset \"" + name + "\"");
}

RunConfig preset_config(const std::string& name) {
  return parse_config(preset_json(name));
}

}  // namespace magsky::cli
