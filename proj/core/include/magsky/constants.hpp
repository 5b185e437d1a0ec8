#pragma once

#include <numbers>

namespace magsky::constants {

// Single source of truth for physical constants; every output file header
// reprints this table so results stay bit-reproducible.
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double mu_0 = 4.0 * pi * 1e-7;       // vacuum permeability [T m/A]
inline constexpr double mu_B = 9.274e-24;             // Bohr magneton [J/T]
inline constexpr double g_factor = 2.0;               // Lande g factor
inline constexpr double hbar = 1.054571817e-34;       // reduced Planck [J s]
inline constexpr double k_B = 1.380649e-23;           // Boltzmann [J/K]
inline constexpr double gamma_e = two_pi * 28.0e9;    // gyromagnetic ratio [rad/s/T]

}  // namespace magsky::constants
