#pragma once

#include <string>

#include <Eigen/Dense>

#include "magsky/constants.hpp"

namespace magsky {

/// 360-degree domain-wall ansatz Theta(rho) = 2 atan2(sinh(R_s/w), sinh(rho/w)):
/// Theta(0) = pi (center spin down), Theta(R_s) = pi/2, Theta -> 0 outward.
struct SkyrmionProfile {
  double R_s = 6e-9;      // skyrmion radius [m]
  double w = 3e-9;        // wall width [m], default R_s / 2
  std::string ansatz = "dw360";
};

/// Geometry and material record for the sphere-plus-skyrmion device.
struct DeviceParams {
  double R_K;                               // sphere radius [m]
  double d_K;                               // surface-to-skyrmion gap [m]
  double M_s;                               // saturation magnetization [A/m]
  double B_K;                               // bias field [T]
  double gamma_e = constants::gamma_e;      // gyromagnetic ratio [rad/s/T]
  double g_factor = constants::g_factor;
  double a = 0.5e-9;                        // lattice constant [m]
  double S_bar = 20.0;                      // effective spin
  SkyrmionProfile profile;

  double h_K() const { return R_K + d_K; }  // center distance [m]
  void validate() const;                    // throws on nonpositive inputs
};

struct QubitSpectrum {
  double A0;        // [rad/s]
  double B0;        // [rad/s]
  double theta;     // mixing angle [rad], tan(2 theta) = B0/A0
  double omega_q;   // splitting sqrt(A0^2 + B0^2) [rad/s]
  double sin_2theta;
  double cos_2theta;

  /// lambda_bar = lambda_KS sin(2 theta) / 2
  double lambda_bar(double lambda_KS) const {
    return lambda_KS * sin_2theta / 2.0;
  }
};

struct SqueezeResult {
  double r;            // squeezing parameter
  double lambda_eff;   // lambda_bar cosh r [rad/s]
  double delta_eff;    // Delta_tilde_K / cosh 2r [rad/s]
  bool valid_rwa;      // Delta_q and delta_eff both >= 10 lambda_bar sinh r
};

struct CouplingResult {
  double lambda_KS;      // [rad/s]
  double lambda_KS_xy;   // [rad/s], magnitude; feeds RWA diagnostics only
  double implied_F;      // dimensionless shape diagnostic (see coupling_strength)
  double quad_error;     // quadrature error estimate (relative)
};

/// omega_K = gamma_e * B_K. Throws on nonpositive field.
double kittel_frequency(double B_K, double gamma_e = constants::gamma_e);

/// M_K = sqrt(hbar gamma_e M_s / (2 V_K)), V_K = 4/3 pi R_K^3. [A/m]
double zero_point_magnetization(double M_s, double R_K,
                                double gamma_e = constants::gamma_e);

/// Exact point-dipole field B = mu0/4pi [3 r (mu.r)/r^5 - mu/r^3].
/// Complex moments are supported for mode-function algebra.
Eigen::Vector3cd dipole_field(const Eigen::Vector3cd& mu,
                              const Eigen::Vector3d& r);
Eigen::Vector3d dipole_field(const Eigen::Vector3d& mu,
                             const Eigen::Vector3d& r);

/// Polar angle of the skyrmion texture at in-plane radius rho >= 0.
double skyrmion_theta(const SkyrmionProfile& profile, double rho);

/// Texture-weighted overlap of the sphere's zero-point dipole field with the
/// skyrmion, reduced to radial quadrature by azimuthal symmetry.
CouplingResult coupling_strength(const DeviceParams& dev);

/// Dressed-basis spectrum of the two-level reduction. Throws if A0 = B0 = 0.
QubitSpectrum qubit_spectrum(double A0, double B0);

/// Bogoliubov frame of the Kerr-driven magnon: r = atanh(K_d/Delta_tilde_K)/2.
/// Throws if |K_d| >= |Delta_tilde_K| (squeezing instability).
SqueezeResult squeezing_transform(double lambda_bar, double K_d,
                                  double Delta_tilde_K, double Delta_q);

/// C = 4 lambda^2 / (gamma_K gamma_Sky). Throws on nonpositive rates.
double cooperativity(double lambda, double gamma_K, double gamma_Sky);

/// Bose-Einstein occupancy 1/(exp(hbar omega / k_B T) - 1); 0 at T = 0.
double thermal_occupancy(double omega, double T);

}  // namespace magsky
