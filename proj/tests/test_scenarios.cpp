#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "magsky/scenarios.hpp"

using namespace magsky;

namespace {

Operator excited_pop(const HilbertSpace& s, int q) {
  return 0.5 * (identity(s) + sigma_z(s, q));
}

double max_of(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

TEST_CASE("resonant exchange model has the symmetric vacuum doublet") {
  JCParams p;
  p.lambda_bar = 1.0;
  auto m = build_jc(p, 3);
  CHECK(m.hamiltonian().is_hermitian());
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.hamiltonian().matrix());
  // single-excitation doublet at +-lambda_bar
  bool plus = false, minus = false;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-12) plus = true;
    if (std::abs(es.eigenvalues()(i) + 1.0) < 1e-12) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("zero coupling leaves the excited state frozen") {
  JCParams p;
  p.lambda_bar = 0.0;
  p.omega_q = 1.0;
  p.omega_K = 1.0;
  auto m = build_jc(p, 3);
  auto traj = evolve(m, jc_excited_vacuum(3), time_grid(5.0, 21));
  auto pe = expectation_real(traj, excited_pop(m.space(), 0));
  for (double v : pe) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("counter-rotating variant grows the Hamiltonian off the excitation ladder") {
  JCParams p;
  p.omega_q = 50.0;
  p.omega_K = 50.0;
  auto rwa = build_jc(p, 3);
  p.include_counter_rotating = true;
  p.lambda_xy = 0.2;
  auto full = build_jc(p, 3);
  CHECK(full.hamiltonian().is_hermitian());
  CHECK((full.hamiltonian().matrix() - rwa.hamiltonian().matrix()).norm() > 0.1);
}

TEST_CASE("second-order elimination rate formula") {
  TwoSkyrmionParams p;
  p.gamma_K = 10.0;
  p.Delta_K1 = 1.0;
  p.lambda_bar = 1.0;
  CHECK(p.elimination_gamma() == doctest::Approx(10.0 / 26.0).epsilon(1e-14));
  CHECK(p.effective_gamma() == doctest::Approx(10.0 / 26.0).epsilon(1e-14));
  p.Gamma = 0.123;
  CHECK(p.effective_gamma() == 0.123);
  p.gamma_K = 4.0;
  CHECK_FALSE(p.elimination_regime_ok());
  p.gamma_K = 5.0;
  CHECK(p.elimination_regime_ok());
}

TEST_CASE("reduced two-qubit model carries the collective collapse operator") {
  TwoSkyrmionParams p;
  auto m = reduce_two_skyrmion(p);
  REQUIRE(m.collapses().size() == 1);
  const auto& s = m.space();
  CHECK(s.num_factors() == 2);
  Matrix expected =
      (0.5 * sigma_x(s, 0) + 1.0 * sigma_minus(s, 1)).matrix();
  CHECK((m.collapses()[0].op.matrix() - expected).norm() < 1e-14);
  CHECK(m.collapses()[0].rate ==
        doctest::Approx(p.elimination_gamma()).epsilon(1e-14));
  // default shift terms vanish
  CHECK(m.hamiltonian().matrix().norm() == 0.0);
}

TEST_CASE("directional transfer maxima are stable regression values") {
  TwoSkyrmionParams p;  // defaults match the reduced-model presets
  auto m = reduce_two_skyrmion(p);
  auto times = time_grid(20.0, 400);
  auto t1 = evolve(m, two_qubit_state(true, false), times, 1e-10, 1e-12);
  auto t2 = evolve(m, two_qubit_state(false, true), times, 1e-10, 1e-12);
  double fwd = max_of(expectation_real(t1, excited_pop(m.space(), 1)));
  double bwd = max_of(expectation_real(t2, excited_pop(m.space(), 0)));
  CHECK(fwd == doctest::Approx(0.167388892614).epsilon(1e-8));
  CHECK(bwd == doctest::Approx(0.531129562026).epsilon(1e-8));
  CHECK(fwd / bwd < 0.5);
}

TEST_CASE("collective decay rate after eliminating the lossy mode") {
  SkyrmionSQParams p;
  p.lambda_bar = 1.0;
  p.gamma_K = 10.0;
  CHECK(p.elimination_gamma() == doctest::Approx(0.4).epsilon(1e-14));
  p.Gamma_SS = 2.0;
  CHECK(p.effective_gamma() == 2.0);
}

TEST_CASE("zero feed-through decouples the second qubit") {
  SkyrmionSQParams p;
  p.eta = 0.0;
  p.G_SS = 0.0;
  auto m = reduce_skyrmion_sq(p);
  auto traj = evolve(m, two_qubit_state(false, true), time_grid(10.0, 51));
  auto psq = expectation_real(traj, excited_pop(m.space(), 1));
  for (double v : psq) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("isolation residual vanishes only at the matched working point") {
  SkyrmionSQParams p;
  p.eta = 1.0;
  p.gamma_K = 10.0;  // Gamma_SS = 0.4
  p.phi_e = constants::pi / 2.0;
  p.G_SS = -p.eta * p.effective_gamma() / 2.0;
  auto ok = isolation_condition(p);
  CHECK(ok.residual < 1e-14);
  CHECK(ok.isolated);

  SkyrmionSQParams off = p;
  off.G_SS = 1.0;  // figure-style parameters, partial isolation only
  auto bad = isolation_condition(off);
  CHECK(bad.residual > 0.1);
  CHECK_FALSE(bad.isolated);

  // phase periodicity
  SkyrmionSQParams shifted = p;
  shifted.phi_e += 2.0 * constants::pi;
  CHECK(isolation_condition(shifted).residual ==
        doctest::Approx(ok.residual).epsilon(1e-12));
}

TEST_CASE("full cascade model is Hermitian with a single magnon decay channel") {
  SkyrmionSQParams p;
  auto m = build_skyrmion_sq_full(p, 4);
  CHECK(m.hamiltonian().is_hermitian());
  REQUIRE(m.collapses().size() == 1);
  CHECK(m.collapses()[0].rate == p.gamma_K);
  CHECK(m.space().num_factors() == 3);
  CHECK(m.space().max_boson_level() == 4);
}

TEST_CASE("identity squeeze frame reproduces the plain exchange model") {
  JCParams p;
  p.omega_q = 0.7;
  p.omega_K = 0.7;
  SqueezeResult sq{0.0, p.lambda_bar, p.omega_K, true};
  auto a = build_jc(p, 4);
  auto b = build_squeezed_jc(p, sq, 4);
  CHECK((a.hamiltonian().matrix() - b.hamiltonian().matrix()).norm() < 1e-14);
}

TEST_CASE("initial-state helpers produce valid pure states") {
  auto r1 = jc_excited_vacuum(5);
  CHECK(r1.trace_deviation() < 1e-12);
  CHECK(r1.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
  auto r2 = two_qubit_boson_state(false, true, 3);
  CHECK(r2.space().num_factors() == 3);
  CHECK(r2.trace_deviation() < 1e-12);
  auto r3 = two_qubit_state(true, true);
  CHECK(r3.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
}
