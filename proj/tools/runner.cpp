#include "runner.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "magsky/lindblad.hpp"

namespace magsky::cli {

namespace {

namespace c = constants;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string hex_hash(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct OutFile {
  explicit OutFile(const std::string& path) {
    if (path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

void write_csv_header(std::ostream& os, const RunConfig& cfg,
                      const std::string& columns) {
  os << "# magsky " << kToolVersion << "\n";
  os << "# config_hash: " << hex_hash(cfg.hash()) << "\n";
  os << "# constants: mu_0=" << fmt12(c::mu_0) << " mu_B=" << fmt12(c::mu_B)
     << " g=" << fmt12(c::g_factor) << " gamma_e=" << fmt12(c::gamma_e)
     << " hbar=" << fmt12(c::hbar) << " k_B=" << fmt12(c::k_B) << "\n";
  if (cfg.device) {
    os << "# profile_ansatz: " << cfg.device->profile.ansatz
       << " R_s=" << fmt12(cfg.device->profile.R_s)
       << " w=" << fmt12(cfg.device->profile.w) << "\n";
  }
  os << "# n_max: " << cfg.n_max << " rel_tol: " << fmt12(cfg.rel_tol) << "\n";
  os << columns << "\n";
}

// Order-stable parallel map: results land at their grid index regardless of
// completion order.
template <typename F>
void parallel_for(int n, int threads, F&& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct PointOutcome {
  std::string row;    // CSV row when ok
  std::string error;  // reason when failed
  bool ok = false;
};

double lambda_bar_from(const RunConfig& cfg, double lambda_KS) {
  if (cfg.A0 && cfg.B0) {
    return qubit_spectrum(*cfg.A0, *cfg.B0).lambda_bar(lambda_KS);
  }
  // Degeneracy-point operation (A0 = 0): sin(2 theta) = 1.
  return lambda_KS / 2.0;
}

struct Grid {
  std::vector<double> rk;
  std::vector<double> dk;
};

Grid sweep_grid(const RunConfig& cfg) {
  if (!cfg.device) throw ConfigError("this subcommand requires a device block");
  Grid g{{cfg.device->R_K}, {cfg.device->d_K}};
  for (const auto& ax : cfg.sweep) {
    if (ax.name == "R_K") g.rk = ax.values();
    if (ax.name == "d_K") g.dk = ax.values();
  }
  return g;
}

}  // namespace

int run_coupling_map(const RunConfig& cfg, const std::string& out_path,
                     int threads) {
  const Grid grid = sweep_grid(cfg);
  const int n = static_cast<int>(grid.rk.size() * grid.dk.size());
  const double gamma_K = c::two_pi * cfg.gamma_K_2pi;
  const double gamma_Sky = c::two_pi * cfg.gamma_Sky_2pi;

  std::vector<PointOutcome> points(static_cast<size_t>(n));
  parallel_for(n, threads, [&](int i) {
    const double rk = grid.rk[static_cast<size_t>(i) / grid.dk.size()];
    const double dk = grid.dk[static_cast<size_t>(i) % grid.dk.size()];
    auto& p = points[static_cast<size_t>(i)];
    try {
      DeviceParams dev = *cfg.device;
      dev.R_K = rk;
      dev.d_K = dk;
      const auto cs = coupling_strength(dev);
      const double coop = cooperativity(cs.lambda_KS, gamma_K, gamma_Sky);
      std::ostringstream row;
      row << fmt12(rk) << ',' << fmt12(dk) << ','
          << fmt12(cs.lambda_KS / c::two_pi) << ','
          << fmt12(cs.lambda_KS_xy / c::two_pi) << ',' << fmt12(coop) << ','
          << fmt12(cs.implied_F) << ',' << fmt12(cs.quad_error);
      p.row = row.str();
      p.ok = true;
    } catch (const std::exception& e) {
      std::ostringstream err;
      err << "# error: R_K=" << fmt12(rk) << " d_K=" << fmt12(dk)
          << " reason=" << e.what();
      p.error = err.str();
    }
  });

  OutFile out(out_path);
  write_csv_header(out.stream(), cfg,
                   "R_K_m,d_K_m,lambda_KS_over_2pi_Hz,lambda_KS_xy_over_2pi_Hz,"
                   "cooperativity,implied_F,quad_rel_error");
  int failed = 0;
  for (const auto& p : points) {
    if (p.ok) {
      out.stream() << p.row << "\n";
    } else {
      out.stream() << p.error << "\n";
      ++failed;
    }
  }
  return failed > 0 ? 1 : 0;
}

namespace {

struct BuiltScenario {
  LindbladModel model;
  DensityMatrix rho0;
  std::vector<std::string> columns;           // population column names
  std::vector<Operator> population_ops;
  std::optional<Operator> boson_number;
  double lambda_bar;
};

BuiltScenario build_scenario(const RunConfig& cfg) {
  const std::string& sc = cfg.scenario;
  const std::string init = cfg.initial_state;
  auto bad_init = [&]() -> std::runtime_error {
    return ConfigError("invalid initial state \"" + init + "\" for scenario " + sc);
  };

  if (sc == "jc" || sc == "jc-squeezed") {
    JCParams p = cfg.jc.value_or(JCParams{});
    LindbladModel model =
        sc == "jc"
            ? build_jc(p, cfg.n_max)
            : build_squeezed_jc(
                  p,
                  squeezing_transform(p.lambda_bar, cfg.squeeze_drive->first,
                                      cfg.squeeze_drive->second,
                                      p.omega_q),
                  cfg.n_max);
    const HilbertSpace space = model.space();
    DensityMatrix rho0 =
        (init.empty() || init == "excited-vacuum")
            ? jc_excited_vacuum(cfg.n_max)
            : (init == "ground-vacuum"
                   ? DensityMatrix::from_ket(space, basis_ket(space, {1, 0}))
                   : throw bad_init());
    return {std::move(model), std::move(rho0),
            {"P_qubit"},
            {sigma_plus(space, 0) * sigma_minus(space, 0)},
            number(space, 1),
            p.lambda_bar};
  }

  if (sc == "two-skyrmion-full" || sc == "two-skyrmion-reduced") {
    const TwoSkyrmionParams p = cfg.two_skyrmion.value_or(TwoSkyrmionParams{});
    const bool full = sc == "two-skyrmion-full";
    if (!full && !p.elimination_regime_ok()) {
      std::cerr << "warning: gamma_K/lambda_bar < 5, adiabatic elimination "
                   "is marginal\n";
    }
    LindbladModel model = full ? build_two_skyrmion_full(p, cfg.n_max)
                               : reduce_two_skyrmion(p);
    bool q1 = init.empty() || init == "q1-excited";
    bool q2 = init == "q2-excited";
    if (!q1 && !q2 && init != "ground") throw bad_init();
    DensityMatrix rho0 = full ? two_qubit_boson_state(q1, q2, cfg.n_max)
                              : two_qubit_state(q1, q2);
    const HilbertSpace space = model.space();
    BuiltScenario b{std::move(model), std::move(rho0),
                    {"P_1", "P_2"},
                    {sigma_plus(space, 0) * sigma_minus(space, 0),
                     sigma_plus(space, 1) * sigma_minus(space, 1)},
                    std::nullopt,
                    p.lambda_bar};
    if (full) b.boson_number = number(space, 2);
    return b;
  }

  if (sc == "sky-sq-full" || sc == "sky-sq-reduced") {
    const SkyrmionSQParams p = cfg.sky_sq.value_or(SkyrmionSQParams{});
    const bool full = sc == "sky-sq-full";
    if (!full && !p.elimination_regime_ok()) {
      std::cerr << "warning: gamma_K below the elimination regime\n";
    }
    LindbladModel model =
        full ? build_skyrmion_sq_full(p, cfg.n_max) : reduce_skyrmion_sq(p);
    bool sky = init.empty() || init == "sky-excited" || init == "both-excited";
    bool sq = init == "sq-excited" || init == "both-excited";
    if (!sky && !sq && init != "ground") throw bad_init();
    DensityMatrix rho0 = full ? two_qubit_boson_state(sky, sq, cfg.n_max)
                              : two_qubit_state(sky, sq);
    const HilbertSpace space = model.space();
    BuiltScenario b{std::move(model), std::move(rho0),
                    {"P_sky", "P_SQ"},
                    {sigma_plus(space, 0) * sigma_minus(space, 0),
                     sigma_plus(space, 1) * sigma_minus(space, 1)},
                    std::nullopt,
                    p.lambda_bar};
    if (full) b.boson_number = number(space, 2);
    return b;
  }

  throw ConfigError("unknown scenario \"" + sc + "\"");
}

}  // namespace

int run_dynamics(const RunConfig& cfg, const std::string& out_path) {
  if (cfg.scenario.empty()) throw ConfigError("dynamics requires a scenario");
  BuiltScenario sc = build_scenario(cfg);

  // Scenario time is measured in 1/lambda_bar; parameters are already in
  // those units so the grid is used as-is.
  const auto grid = time_grid(cfg.t_max, cfg.n_points);
  const auto traj = evolve(sc.model, sc.rho0, grid, cfg.rel_tol);

  std::vector<std::vector<double>> pops;
  for (const auto& op : sc.population_ops) pops.push_back(expectation_real(traj, op));
  std::optional<std::vector<double>> nbos;
  if (sc.boson_number) nbos = expectation_real(traj, *sc.boson_number);

  std::string columns = "t_lambda";
  for (const auto& name : sc.columns) columns += "," + name;
  if (nbos) columns += ",n_boson";
  columns += ",trace_dev,min_eig";

  OutFile out(out_path);
  write_csv_header(out.stream(), cfg, columns);
  for (size_t i = 0; i < traj.times.size(); ++i) {
    out.stream() << fmt12(traj.times[i]);
    for (const auto& p : pops) out.stream() << ',' << fmt12(p[i]);
    if (nbos) out.stream() << ',' << fmt12((*nbos)[i]);
    out.stream() << ',' << fmt12(traj.states[i].trace_deviation()) << ','
                 << fmt12(traj.states[i].min_eigenvalue()) << "\n";
  }
  return 0;
}

int run_feasibility(const RunConfig& cfg, const std::string& out_path) {
  if (!cfg.device) throw ConfigError("feasibility requires a device block");
  const DeviceParams& dev = *cfg.device;
  const double omega_K = kittel_frequency(dev.B_K, dev.gamma_e);
  const auto cs = coupling_strength(dev);
  const double lambda_bar = lambda_bar_from(cfg, cs.lambda_KS);
  const double gamma_K = c::two_pi * cfg.gamma_K_2pi;
  const double gamma_Sky = c::two_pi * cfg.gamma_Sky_2pi;
  const double coop = cooperativity(cs.lambda_KS, gamma_K, gamma_Sky);
  const double nbar = thermal_occupancy(omega_K, cfg.temperature);

  nlohmann::json rep;
  rep["tool"] = std::string("magsky ") + kToolVersion;
  rep["config_hash"] = hex_hash(cfg.hash());
  rep["constants"] = {{"mu_0_T_m_per_A", c::mu_0},
                      {"mu_B_J_per_T", c::mu_B},
                      {"g_factor", c::g_factor},
                      {"gamma_e_rad_per_s_T", c::gamma_e},
                      {"hbar_J_s", c::hbar},
                      {"k_B_J_per_K", c::k_B}};
  rep["device"] = {{"R_K_m", dev.R_K},
                   {"d_K_m", dev.d_K},
                   {"h_K_m", dev.h_K()},
                   {"M_s_A_per_m", dev.M_s},
                   {"B_K_T", dev.B_K},
                   {"a_m", dev.a},
                   {"S_bar", dev.S_bar},
                   {"profile_ansatz", dev.profile.ansatz},
                   {"R_s_m", dev.profile.R_s},
                   {"w_m", dev.profile.w}};
  rep["magnon"] = {{"omega_K_rad_per_s", omega_K},
                   {"omega_K_over_2pi_Hz", omega_K / c::two_pi},
                   {"thermal_occupancy", nbar},
                   {"temperature_K", cfg.temperature}};
  rep["coupling"] = {{"lambda_KS_rad_per_s", cs.lambda_KS},
                     {"lambda_KS_over_2pi_Hz", cs.lambda_KS / c::two_pi},
                     {"lambda_KS_xy_over_2pi_Hz", cs.lambda_KS_xy / c::two_pi},
                     {"lambda_bar_over_2pi_Hz", lambda_bar / c::two_pi},
                     {"implied_F", cs.implied_F},
                     {"quad_rel_error", cs.quad_error}};
  if (cfg.A0 && cfg.B0) {
    const auto qs = qubit_spectrum(*cfg.A0, *cfg.B0);
    rep["qubit"] = {{"A0_rad_per_s", qs.A0},
                    {"B0_rad_per_s", qs.B0},
                    {"theta_rad", qs.theta},
                    {"sin_2theta", qs.sin_2theta},
                    {"omega_q_rad_per_s", qs.omega_q},
                    {"omega_q_over_2pi_Hz", qs.omega_q / c::two_pi}};
  } else {
    rep["qubit"] = {{"note", "A0/B0 not supplied; degeneracy-point operation "
                             "assumed (sin 2theta = 1, lambda_bar = lambda_KS/2)"}};
  }
  rep["cooperativity"] = {{"value", coop},
                          {"gamma_K_over_2pi_Hz", cfg.gamma_K_2pi},
                          {"gamma_Sky_over_2pi_Hz", cfg.gamma_Sky_2pi}};
  rep["notes"] = nlohmann::json::array(
      {"cooperativity uses C = 4 lambda_KS^2/(gamma_K gamma_Sky) as printed; "
       "the source work quotes C ~ 51 for lambda_KS/2pi = 12.7 MHz and 1 MHz "
       "dissipation, where this formula gives ~645. The discrepancy is "
       "reported, not reconciled."});

  nlohmann::json table = nlohmann::json::array();
  for (double ratio : cfg.kd_ratios) {
    const double delta_tilde = cfg.delta_q_over_lambda * lambda_bar;
    const auto sq = squeezing_transform(lambda_bar, ratio * delta_tilde,
                                        delta_tilde, delta_tilde);
    table.push_back({{"kd_over_delta", ratio},
                     {"r", sq.r},
                     {"cosh_r", std::cosh(sq.r)},
                     {"lambda_eff_over_2pi_Hz", sq.lambda_eff / c::two_pi},
                     {"delta_eff_over_delta_tilde", sq.delta_eff / delta_tilde},
                     {"valid_rwa", sq.valid_rwa}});
  }
  rep["squeezing_table"] = table;

  OutFile out(out_path);
  out.stream() << rep.dump(2) << "\n";
  return 0;
}

int run_squeeze_sweep(const RunConfig& cfg, const std::string& out_path,
                      int threads) {
  const Grid grid = sweep_grid(cfg);
  std::vector<double> ratios = cfg.kd_ratios;
  if (ratios.empty()) ratios = {0.0, 0.5, 0.8, 0.9};
  const int nr = static_cast<int>(grid.rk.size() * grid.dk.size());

  std::vector<PointOutcome> points(static_cast<size_t>(nr));
  parallel_for(nr, threads, [&](int i) {
    const double rk = grid.rk[static_cast<size_t>(i) / grid.dk.size()];
    const double dk = grid.dk[static_cast<size_t>(i) % grid.dk.size()];
    auto& p = points[static_cast<size_t>(i)];
    try {
      DeviceParams dev = *cfg.device;
      dev.R_K = rk;
      dev.d_K = dk;
      const auto cs = coupling_strength(dev);
      const double lambda_bar = lambda_bar_from(cfg, cs.lambda_KS);
      std::ostringstream rows;
      for (size_t k = 0; k < ratios.size(); ++k) {
        const double delta_tilde = cfg.delta_q_over_lambda * lambda_bar;
        const auto sq = squeezing_transform(lambda_bar, ratios[k] * delta_tilde,
                                            delta_tilde, delta_tilde);
        rows << fmt12(rk) << ',' << fmt12(dk) << ','
             << fmt12(cs.lambda_KS / c::two_pi) << ',' << fmt12(ratios[k])
             << ',' << fmt12(sq.r) << ',' << fmt12(std::cosh(sq.r)) << ','
             << fmt12(sq.lambda_eff / c::two_pi) << ','
             << fmt12(sq.delta_eff / delta_tilde) << ','
             << (sq.valid_rwa ? 1 : 0) << "\n";
      }
      p.row = rows.str();
      p.ok = true;
    } catch (const std::exception& e) {
      std::ostringstream err;
      err << "# error: R_K=" << fmt12(rk) << " d_K=" << fmt12(dk)
          << " reason=" << e.what() << "\n";
      p.error = err.str();
    }
  });

  OutFile out(out_path);
  write_csv_header(out.stream(), cfg,
                   "R_K_m,d_K_m,lambda_KS_over_2pi_Hz,kd_over_delta,r,cosh_r,"
                   "lambda_eff_over_2pi_Hz,delta_eff_over_delta_tilde,valid_rwa");
  int failed = 0;
  for (const auto& p : points) {
    out.stream() << (p.ok ? p.row : p.error);
    if (!p.ok) ++failed;
  }
  return failed > 0 ? 1 : 0;
}

}  // namespace magsky::cli
