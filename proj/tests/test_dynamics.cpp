#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "magsky/lindblad.hpp"
#include "magsky/scenarios.hpp"

using namespace magsky;

namespace {

// Single-excitation block of the detuned lossless exchange model, solved by
// direct 2x2 diagonalization. Independent of the integrator.
double excited_population_oracle(double delta, double lambda, double t) {
  Eigen::Matrix2cd h;
  h << delta / 2.0, lambda, lambda, -delta / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
  Eigen::Vector2cd psi0(1.0, 0.0);
  Eigen::Vector2cd c = es.eigenvectors().adjoint() * psi0;
  Eigen::Vector2cd phase;
  phase << std::exp(Complex(0, -es.eigenvalues()(0) * t)) * c(0),
      std::exp(Complex(0, -es.eigenvalues()(1) * t)) * c(1);
  Eigen::Vector2cd psi = es.eigenvectors() * phase;
  return std::norm(psi(0));
}

Operator excited_projector(const HilbertSpace& s, int q) {
  return 0.5 * (identity(s) + sigma_z(s, q));
}

}  // namespace

TEST_CASE("free precession conserves sigma_z exactly") {
  auto q = HilbertSpace::qubit();
  LindbladModel m(q, sigma_x(q, 0), {});
  Vector psi(2);
  psi << std::sqrt(0.25), std::sqrt(0.75);
  auto traj = evolve(m, DensityMatrix::from_ket(q, psi), time_grid(10.0, 101));
  auto sx = expectation_real(traj, sigma_x(q, 0));
  for (double v : sx) CHECK(v == doctest::Approx(sx.front()).epsilon(1e-9));
}

TEST_CASE("amplitude damping matches the exponential law") {
  auto q = HilbertSpace::qubit();
  const double gamma = 0.7;
  LindbladModel m(q, 0.0 * sigma_z(q, 0), {{gamma, sigma_minus(q, 0)}});
  auto rho0 = DensityMatrix::from_ket(q, basis_ket(q, {0}));
  auto traj = evolve(m, rho0, time_grid(6.0, 61), 1e-10, 1e-12);
  auto pe = expectation_real(traj, excited_projector(q, 0));
  for (size_t i = 0; i < traj.times.size(); ++i) {
    CHECK(pe[i] == doctest::Approx(std::exp(-gamma * traj.times[i])).epsilon(1e-8));
  }
}

TEST_CASE("exchange dynamics match the single-excitation diagonalization oracle") {
  for (double delta : {0.0, 1.3}) {
    JCParams p;
    p.omega_q = delta;
    p.omega_K = 0.0;
    p.lambda_bar = 1.0;
    auto m = build_jc(p, 4);
    auto traj =
        evolve(m, jc_excited_vacuum(4), time_grid(4.0 * M_PI, 201), 1e-10, 1e-12);
    auto pe = expectation_real(traj, excited_projector(m.space(), 0));
    double sup = 0.0;
    for (size_t i = 0; i < traj.times.size(); ++i) {
      sup = std::max(sup, std::abs(pe[i] - excited_population_oracle(
                                               delta, 1.0, traj.times[i])));
    }
    CHECK(sup < 1e-6);
  }
}

TEST_CASE("lossless exchange conserves total excitation number") {
  JCParams p;
  auto m = build_jc(p, 6);
  const auto& s = m.space();
  auto n_total = number(s, 1) + excited_projector(s, 0);
  auto traj = evolve(m, jc_excited_vacuum(6), time_grid(20.0, 101), 1e-9, 1e-11);
  auto n = expectation_real(traj, n_total);
  for (double v : n) CHECK(std::abs(v - 1.0) < 1e-9);
}

TEST_CASE("tightening the tolerance reduces the error") {
  JCParams p;
  p.omega_q = 0.4;
  auto m = build_jc(p, 4);
  auto rho0 = jc_excited_vacuum(4);
  auto times = time_grid(10.0, 21);
  auto pe = [&](double tol) {
    return expectation_real(evolve(m, rho0, times, tol, tol * 1e-2),
                            excited_projector(m.space(), 0));
  };
  auto ref = pe(1e-12);
  double e_loose = 0.0, e_tight = 0.0;
  auto loose = pe(1e-5), tight = pe(1e-9);
  for (size_t i = 0; i < ref.size(); ++i) {
    e_loose = std::max(e_loose, std::abs(loose[i] - ref[i]));
    e_tight = std::max(e_tight, std::abs(tight[i] - ref[i]));
  }
  CHECK(e_tight < e_loose);
  CHECK(e_tight < 1e-7);
}

TEST_CASE("a time-dependent drive reproduces the equivalent static term") {
  auto q = HilbertSpace::qubit();
  auto h0 = 0.5 * sigma_z(q, 0);
  Matrix v = 0.8 * sigma_x(q, 0).matrix();
  LindbladModel static_model(q, h0 + Operator(q, v), {});
  LindbladModel driven(q, h0, {}, [v](double) { return v; });
  CHECK(driven.has_drive());
  Vector psi(2);
  psi << 1.0, 0.0;
  auto rho0 = DensityMatrix::from_ket(q, psi);
  auto times = time_grid(5.0, 51);
  auto a = evolve(static_model, rho0, times, 1e-10, 1e-12);
  auto b = evolve(driven, rho0, times, 1e-10, 1e-12);
  auto devs = compare_models(a, b, {{sigma_z(q, 0), sigma_z(q, 0)},
                                    {sigma_y(q, 0), sigma_y(q, 0)}});
  for (double d : devs) CHECK(d < 1e-8);
}

TEST_CASE("compare_models requires identical time grids") {
  auto q = HilbertSpace::qubit();
  LindbladModel m(q, sigma_z(q, 0), {});
  auto rho0 = DensityMatrix::from_ket(q, basis_ket(q, {0}));
  auto a = evolve(m, rho0, time_grid(1.0, 11));
  auto b = evolve(m, rho0, time_grid(1.0, 12));
  CHECK_THROWS_AS(compare_models(a, b, {{sigma_z(q, 0), sigma_z(q, 0)}}),
                  std::invalid_argument);
  auto devs = compare_models(a, a, {{sigma_z(q, 0), sigma_z(q, 0)}});
  CHECK(devs.size() == 1);
  CHECK(devs[0] == 0.0);
}

TEST_CASE("model construction rejects bad inputs") {
  auto q = HilbertSpace::qubit();
  CHECK_THROWS_AS(LindbladModel(q, sigma_minus(q, 0), {}), std::invalid_argument);
  CHECK_THROWS_AS(LindbladModel(q, sigma_z(q, 0), {{-1.0, sigma_minus(q, 0)}}),
                  std::invalid_argument);
  auto b = HilbertSpace::boson(2);
  CHECK_THROWS_AS(LindbladModel(q, sigma_z(q, 0), {{1.0, annihilate(b, 0)}}),
                  std::invalid_argument);
}

TEST_CASE("time grids are uniform from zero") {
  auto g = time_grid(2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(time_grid(2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(time_grid(-1.0, 5), std::invalid_argument);
}

TEST_CASE("trajectory metadata records provenance and truncation") {
  JCParams p;
  auto m = build_jc(p, 5);
  auto traj = evolve(m, jc_excited_vacuum(5), time_grid(1.0, 11), 1e-8);
  CHECK(traj.meta.model_hash == m.hash());
  CHECK(traj.meta.n_max == 5);
  CHECK(traj.meta.rel_tol == 1e-8);
  CHECK(traj.meta.rhs_evaluations > 0);
  CHECK(traj.meta.accepted_steps > 0);
}
