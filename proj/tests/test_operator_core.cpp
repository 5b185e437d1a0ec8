#include <random>

#include "doctest.h"
#include "magsky/hilbert.hpp"

using namespace magsky;

namespace {

Matrix random_density(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> n;
  Matrix A(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) A(i, j) = Complex(n(rng), n(rng));
  Matrix rho = A * A.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

TEST_CASE("qubit operators follow the index-0-excited convention") {
  auto q = HilbertSpace::qubit();
  auto sz = sigma_z(q, 0).matrix();
  CHECK(sz(0, 0) == Complex(1, 0));
  CHECK(sz(1, 1) == Complex(-1, 0));
  auto sm = sigma_minus(q, 0).matrix();
  CHECK(sm(1, 0) == Complex(1, 0));  // |g><e|
  CHECK(sm(0, 1) == Complex(0, 0));
  CHECK((sigma_plus(q, 0).matrix() - sm.adjoint()).norm() == 0.0);
  auto sx = sigma_x(q, 0);
  auto sy = sigma_y(q, 0);
  CHECK(sx.is_hermitian());
  CHECK(sy.is_hermitian());
  // sigma_x sigma_y = i sigma_z
  CHECK(((sx * sy).matrix() - Complex(0, 1) * sz).norm() < 1e-15);
}

TEST_CASE("boson ladder matrix elements are sqrt(n)") {
  const int n_max = 7;
  auto b = HilbertSpace::boson(n_max);
  auto a = annihilate(b, 0).matrix();
  for (int n = 1; n <= n_max; ++n) {
    CHECK(a(n - 1, n).real() == doctest::Approx(std::sqrt(double(n))).epsilon(1e-15));
  }
  CHECK((create(b, 0).matrix() - a.adjoint()).norm() == 0.0);
  auto nop = number(b, 0).matrix();
  CHECK((nop - a.adjoint() * a).norm() < 1e-14);
}

TEST_CASE("truncated commutator [a, a^dag] is identity except the top level") {
  const int n_max = 5;
  auto b = HilbertSpace::boson(n_max);
  Matrix comm = (annihilate(b, 0) * create(b, 0)).matrix() -
                (create(b, 0) * annihilate(b, 0)).matrix();
  Matrix expected = Matrix::Identity(n_max + 1, n_max + 1);
  expected(n_max, n_max) = -double(n_max);
  // sqrt(n)*sqrt(n) rounds, so exactness holds only to machine precision
  CHECK((comm - expected).norm() < 1e-14);
}

TEST_CASE("embedded operators match explicit tensor products") {
  auto space = HilbertSpace::qubit().compose(HilbertSpace::boson(3));
  auto lhs = sigma_z(space, 0);
  auto rhs = tensor(sigma_z(HilbertSpace::qubit(), 0),
                    identity(HilbertSpace::boson(3)));
  CHECK((lhs.matrix() - rhs.matrix()).norm() == 0.0);
  auto lhs2 = annihilate(space, 1);
  auto rhs2 = tensor(identity(HilbertSpace::qubit()),
                     annihilate(HilbertSpace::boson(3), 0));
  CHECK((lhs2.matrix() - rhs2.matrix()).norm() == 0.0);
}

TEST_CASE("tensor product is associative up to exact equality") {
  auto q = HilbertSpace::qubit();
  auto b = HilbertSpace::boson(2);
  auto x = sigma_x(q, 0);
  auto a = annihilate(b, 0);
  auto z = sigma_z(q, 0);
  CHECK((tensor(tensor(x, a), z).matrix() - tensor(x, tensor(a, z)).matrix())
            .norm() == 0.0);
}

TEST_CASE("operator kind mismatches are rejected") {
  auto space = HilbertSpace::qubit().compose(HilbertSpace::boson(3));
  CHECK_THROWS_AS(annihilate(space, 0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_x(space, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_minus(space, 2), std::invalid_argument);
}

TEST_CASE("operators on different spaces cannot be combined") {
  auto a = identity(HilbertSpace::boson(3));
  auto b = identity(HilbertSpace::boson(4));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("basis kets address factor levels in order") {
  auto space = HilbertSpace::qubit().compose(HilbertSpace::boson(3));
  auto psi = basis_ket(space, {1, 2});
  CHECK(psi.size() == 8);
  CHECK(psi(1 * 4 + 2) == Complex(1, 0));
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(basis_ket(space, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(basis_ket(space, {0}), std::invalid_argument);
}

TEST_CASE("density matrix validation rejects malformed states") {
  auto q = HilbertSpace::qubit();
  Matrix ok = Matrix::Zero(2, 2);
  ok(0, 0) = 1.0;
  CHECK_NOTHROW(DensityMatrix(q, ok));

  Matrix bad_trace = 0.5 * ok;
  CHECK_THROWS_AS(DensityMatrix(q, bad_trace), std::invalid_argument);

  Matrix non_herm = ok;
  non_herm(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix(q, non_herm), std::invalid_argument);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(q, neg), std::invalid_argument);
}

TEST_CASE("dissipator preserves trace and Hermiticity on random states") {
  for (int dim : {2, 5, 12}) {
    auto space = HilbertSpace::boson(dim - 1);
    auto L = annihilate(space, 0);
    for (unsigned seed = 0; seed < 4; ++seed) {
      Matrix rho = random_density(dim, seed + 17 * dim);
      Matrix d = dissipator(L, rho);
      CHECK(std::abs(d.trace()) < 1e-12);
      CHECK((d - d.adjoint()).norm() < 1e-12);
    }
  }
}

TEST_CASE("dissipator of sigma_minus on the excited state feeds the ground state") {
  auto q = HilbertSpace::qubit();
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1.0;  // excited
  Matrix d = dissipator(sigma_minus(q, 0), rho);
  CHECK(d(0, 0).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(d(1, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
}
