#pragma once

#include "magsky/device.hpp"
#include "magsky/lindblad.hpp"

namespace magsky {

// Parameters are in angular-frequency units; figure-style runs set
// lambda_bar = 1 and measure time in 1/lambda_bar.

struct JCParams {
  double omega_q = 0.0;
  double omega_K = 0.0;
  double lambda_bar = 1.0;
  bool include_counter_rotating = false;
  double lambda_xy = 0.0;  // coefficient of the (s + s^dag) sigma_z drive term,
                           // lambda_KS^xy sin(2 theta); dropped under the RWA
};

struct TwoSkyrmionParams {
  double Omega_2 = 1.0;
  double Delta_q1 = 1.0;
  double Delta_K1 = 1.0;
  double lambda_bar = 1.0;
  double gamma_K = 10.0;
  // Reduced-model knobs; Lamb-shift terms default to zero, Gamma < 0 means
  // "use the second-order elimination formula".
  double W1 = 0.0;
  double W2 = 0.0;
  double G = 0.0;
  double Gamma = -1.0;

  /// gamma_K lambda_bar^2 / (Delta_K1^2 + gamma_K^2/4)
  double elimination_gamma() const;
  double effective_gamma() const { return Gamma >= 0.0 ? Gamma : elimination_gamma(); }
  /// Elimination assumes gamma_K >> lambda_bar; marginal below ratio 5.
  bool elimination_regime_ok() const { return gamma_K >= 5.0 * lambda_bar; }
};

struct SkyrmionSQParams {
  double eta = 1.0;        // J_KT^0 / (2 lambda_bar)
  double phi_e = 0.0;      // modulation phase [rad]
  double G_SS = 0.0;       // coherent skyrmion-SQ coupling
  double Gamma_SS = -1.0;  // collective decay; < 0 means 4 lambda_bar^2/gamma_K
  double lambda_bar = 1.0;
  double gamma_K = 10.0;

  double elimination_gamma() const { return 4.0 * lambda_bar * lambda_bar / gamma_K; }
  double effective_gamma() const {
    return Gamma_SS >= 0.0 ? Gamma_SS : elimination_gamma();
  }
  bool elimination_regime_ok() const {
    return gamma_K >= 5.0 * lambda_bar && gamma_K >= 5.0 * (2.0 * eta * lambda_bar);
  }
};

struct IsolationCheck {
  double residual;  // |i G_SS + (Gamma_SS/2) eta e^{i phi_e}|
  bool isolated;    // residual < 1e-12 * Gamma_SS
};

/// Qubit (x) boson JC model: H = omega_q/2 sz + omega_K n + lambda_bar (a s+ + a^dag s-),
/// optionally with the counter-rotating and sigma_z-drive terms restored.
LindbladModel build_jc(const JCParams& p, int n_max);

/// JC model in the Bogoliubov frame: detunings and coupling from the squeeze
/// transform. p.omega_q is reinterpreted as Delta_q.
LindbladModel build_squeezed_jc(const JCParams& p, const SqueezeResult& sq,
                                int n_max);

/// Qubit1 (x) qubit2 (x) boson: driven Rabi arm on qubit 1, JC arm on qubit 2,
/// magnon decay gamma_K.
LindbladModel build_two_skyrmion_full(const TwoSkyrmionParams& p, int n_max);

/// Magnon eliminated: H = W1/2 sz1 + W2/2 sz2 - G sx1 sx2 with collective
/// collapse Sigma- = 1/2 sx1 + s-2 at rate Gamma. Flags gamma_K/lambda_bar < 5.
LindbladModel reduce_two_skyrmion(const TwoSkyrmionParams& p);

/// Skyrmion (x) SQ (x) boson in the interaction picture:
/// H = lambda_bar (s L+ + s^dag L-) + G_SS (s+ sS- + s- sS+), magnon decay
/// gamma_K, with L- = s- + eta e^{i phi_e} sS-.
LindbladModel build_skyrmion_sq_full(const SkyrmionSQParams& p, int n_max);

/// Magnon eliminated: H = G_SS (s+ sS- + s- sS+) with collapse (Gamma_SS, L-).
LindbladModel reduce_skyrmion_sq(const SkyrmionSQParams& p);

/// Residual of the coefficient feeding the SQ into the skyrmion equation of
/// motion; zero at phi_e = pi/2, G_SS = -eta Gamma_SS / 2.
IsolationCheck isolation_condition(const SkyrmionSQParams& p);

// Initial states used by the figure presets.
DensityMatrix jc_excited_vacuum(int n_max);                    // |e, 0>
DensityMatrix two_qubit_boson_state(bool q1_excited, bool q2_excited, int n_max);
DensityMatrix two_qubit_state(bool q1_excited, bool q2_excited);

}  // namespace magsky
