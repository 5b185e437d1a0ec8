#include "magsky/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace magsky {

namespace {

void require_nmax(int n_max, int least) {
  if (n_max < least) {
    throw std::invalid_argument("scenario: n_max >= " + std::to_string(least) +
                                " required");
  }
}

}  // namespace

double TwoSkyrmionParams::elimination_gamma() const {
  return gamma_K * lambda_bar * lambda_bar /
         (Delta_K1 * Delta_K1 + gamma_K * gamma_K / 4.0);
}

LindbladModel build_jc(const JCParams& p, int n_max) {
  require_nmax(n_max, 1);
  if (p.lambda_bar < 0) throw std::invalid_argument("build_jc: lambda_bar >= 0");
  const auto space = HilbertSpace::qubit().compose(HilbertSpace::boson(n_max));
  const auto sz = sigma_z(space, 0);
  const auto sp = sigma_plus(space, 0);
  const auto sm = sigma_minus(space, 0);
  const auto a = annihilate(space, 1);
  const auto ad = create(space, 1);
  const auto n = number(space, 1);

  Operator h = (p.omega_q / 2.0) * sz + p.omega_K * n +
               p.lambda_bar * (a * sp + ad * sm);
  if (p.include_counter_rotating) {
    h = h + p.lambda_bar * (a * sm + ad * sp);
    if (p.lambda_xy != 0.0) {
      h = h + (p.lambda_xy / 2.0) * ((a + ad) * sz);
    }
  }
  return LindbladModel(space, h, {});
}

LindbladModel build_squeezed_jc(const JCParams& p, const SqueezeResult& sq,
                                int n_max) {
  require_nmax(n_max, 1);
  JCParams eff;
  eff.omega_q = p.omega_q;  // Delta_q in the driven frame
  eff.omega_K = sq.delta_eff;
  eff.lambda_bar = sq.lambda_eff;
  return build_jc(eff, n_max);
}

LindbladModel build_two_skyrmion_full(const TwoSkyrmionParams& p, int n_max) {
  require_nmax(n_max, 2);
  if (p.gamma_K <= 0) throw std::invalid_argument("two_skyrmion: gamma_K > 0");
  const auto space = HilbertSpace::qubit()
                         .compose(HilbertSpace::qubit())
                         .compose(HilbertSpace::boson(n_max));
  const auto sz1 = sigma_z(space, 0);
  const auto sx1 = sigma_x(space, 0);
  const auto sz2 = sigma_z(space, 1);
  const auto sp2 = sigma_plus(space, 1);
  const auto sm2 = sigma_minus(space, 1);
  const auto a = annihilate(space, 2);
  const auto ad = create(space, 2);

  const Operator h = (p.Omega_2 / 2.0) * sz1 + (p.Delta_q1 / 2.0) * sz2 +
                     p.Delta_K1 * (ad * a) +
                     (p.lambda_bar / 2.0) * ((a + ad) * sx1) +
                     p.lambda_bar * (a * sp2 + ad * sm2);
  return LindbladModel(space, h, {{p.gamma_K, a}});
}

LindbladModel reduce_two_skyrmion(const TwoSkyrmionParams& p) {
  if (p.gamma_K <= 0) throw std::invalid_argument("two_skyrmion: gamma_K > 0");
  const auto space = HilbertSpace::qubit().compose(HilbertSpace::qubit());
  const auto sz1 = sigma_z(space, 0);
  const auto sx1 = sigma_x(space, 0);
  const auto sz2 = sigma_z(space, 1);
  const auto sx2 = sigma_x(space, 1);
  const auto sm2 = sigma_minus(space, 1);

  const Operator h = (p.W1 / 2.0) * sz1 + (p.W2 / 2.0) * sz2 +
                     (-p.G) * (sx1 * sx2);
  const Operator sigma_collective = 0.5 * sx1 + sm2;
  return LindbladModel(space, h, {{p.effective_gamma(), sigma_collective}});
}

LindbladModel build_skyrmion_sq_full(const SkyrmionSQParams& p, int n_max) {
  require_nmax(n_max, 2);
  if (p.gamma_K <= 0) throw std::invalid_argument("skyrmion_sq: gamma_K > 0");
  if (p.eta < 0) throw std::invalid_argument("skyrmion_sq: eta >= 0");
  const auto space = HilbertSpace::qubit()
                         .compose(HilbertSpace::qubit())
                         .compose(HilbertSpace::boson(n_max));
  const auto sp = sigma_plus(space, 0);
  const auto sm = sigma_minus(space, 0);
  const auto spS = sigma_plus(space, 1);
  const auto smS = sigma_minus(space, 1);
  const auto a = annihilate(space, 2);
  const auto ad = create(space, 2);

  const Complex phase = std::exp(Complex(0.0, p.phi_e));
  const Operator l_minus = sm + (p.eta * phase) * smS;
  const Operator l_plus = l_minus.dag();
  const Operator h = p.lambda_bar * (a * l_plus + ad * l_minus) +
                     p.G_SS * (sp * smS + sm * spS);
  return LindbladModel(space, h, {{p.gamma_K, a}});
}

LindbladModel reduce_skyrmion_sq(const SkyrmionSQParams& p) {
  if (p.gamma_K <= 0) throw std::invalid_argument("skyrmion_sq: gamma_K > 0");
  if (p.eta < 0) throw std::invalid_argument("skyrmion_sq: eta >= 0");
  const auto space = HilbertSpace::qubit().compose(HilbertSpace::qubit());
  const auto sp = sigma_plus(space, 0);
  const auto sm = sigma_minus(space, 0);
  const auto spS = sigma_plus(space, 1);
  const auto smS = sigma_minus(space, 1);

  const Complex phase = std::exp(Complex(0.0, p.phi_e));
  const Operator l_minus = sm + (p.eta * phase) * smS;
  const Operator h = p.G_SS * (sp * smS + sm * spS);
  return LindbladModel(space, h, {{p.effective_gamma(), l_minus}});
}

IsolationCheck isolation_condition(const SkyrmionSQParams& p) {
  const double gamma = p.effective_gamma();
  const Complex coeff = Complex(0.0, p.G_SS) +
                        (gamma / 2.0) * p.eta * std::exp(Complex(0.0, p.phi_e));
  IsolationCheck out;
  out.residual = std::abs(coeff);
  out.isolated = out.residual < 1e-12 * gamma;
  return out;
}

DensityMatrix jc_excited_vacuum(int n_max) {
  const auto space = HilbertSpace::qubit().compose(HilbertSpace::boson(n_max));
  return DensityMatrix::from_ket(space, basis_ket(space, {0, 0}));
}

DensityMatrix two_qubit_boson_state(bool q1_excited, bool q2_excited, int n_max) {
  const auto space = HilbertSpace::qubit()
                         .compose(HilbertSpace::qubit())
                         .compose(HilbertSpace::boson(n_max));
  return DensityMatrix::from_ket(
      space, basis_ket(space, {q1_excited ? 0 : 1, q2_excited ? 0 : 1, 0}));
}

DensityMatrix two_qubit_state(bool q1_excited, bool q2_excited) {
  const auto space = HilbertSpace::qubit().compose(HilbertSpace::qubit());
  return DensityMatrix::from_ket(
      space, basis_ket(space, {q1_excited ? 0 : 1, q2_excited ? 0 : 1}));
}

}  // namespace magsky
