#pragma once

#include <string>

#include "config.hpp"

namespace magsky::cli {

// Each runner writes to out_path ("-" = stdout) and returns the process exit
// code: 0 on success, 1 if any sweep point failed (error records are kept in
// the output, the run continues).

/// Grid of (R_K, d_K) -> lambda_KS, lambda_KS_xy, cooperativity, implied F.
int run_coupling_map(const RunConfig& cfg, const std::string& out_path,
                     int threads = 1);

/// Time series of subsystem populations for the configured scenario.
int run_dynamics(const RunConfig& cfg, const std::string& out_path);

/// JSON summary: omega_K, coupling, cooperativity, thermal occupancy and a
/// squeezing table, with units and constants provenance.
int run_feasibility(const RunConfig& cfg, const std::string& out_path);

/// Squeezing-enhanced coupling table over a device sweep x K_d/Delta ratios.
int run_squeeze_sweep(const RunConfig& cfg, const std::string& out_path,
                      int threads = 1);

}  // namespace magsky::cli
