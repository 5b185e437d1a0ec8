#include "magsky/hilbert.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace magsky {

namespace {

const Complex kI(0.0, 1.0);

void check_factor(const HilbertSpace& space, int factor, FactorKind want,
                  const char* what) {
  if (factor < 0 || factor >= space.num_factors()) {
    throw std::invalid_argument(std::string(what) + ": factor index " +
                                std::to_string(factor) + " out of range");
  }
  if (space.factor(factor).kind != want) {
    throw std::invalid_argument(std::string(what) + ": factor " +
                                std::to_string(factor) + " has the wrong kind");
  }
}

// Embeds a factor-local matrix as I x ... x op x ... x I.
Operator embed(const HilbertSpace& space, int factor, const Matrix& local) {
  Matrix full = Matrix::Identity(1, 1);
  for (int i = 0; i < space.num_factors(); ++i) {
    const int d = space.factor(i).dim;
    const Matrix block = (i == factor) ? local : Matrix::Identity(d, d);
    full = Eigen::kroneckerProduct(full, block).eval();
  }
  return Operator(space, std::move(full));
}

Matrix local_sigma(char which) {
  Matrix m = Matrix::Zero(2, 2);
  switch (which) {
    case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'y': m(0, 1) = -kI; m(1, 0) = kI; break;
    case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case '+': m(0, 1) = 1.0; break;  // |e><g|
    case '-': m(1, 0) = 1.0; break;  // |g><e|
  }
  return m;
}

Matrix local_annihilate(int dim) {
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(double(n));
  return m;
}

}  // namespace

HilbertSpace::HilbertSpace(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("HilbertSpace: no factors");
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::Qubit && f.dim != 2) {
      throw std::invalid_argument("HilbertSpace: qubit factor must have dim 2");
    }
    if (f.kind == FactorKind::Boson && f.dim < 2) {
      throw std::invalid_argument("HilbertSpace: boson needs n_max >= 1");
    }
    dim_ *= f.dim;
  }
}

HilbertSpace HilbertSpace::qubit() {
  return HilbertSpace({{FactorKind::Qubit, 2}});
}

HilbertSpace HilbertSpace::boson(int n_max) {
  if (n_max < 1) throw std::invalid_argument("boson: n_max >= 1 required");
  return HilbertSpace({{FactorKind::Boson, n_max + 1}});
}

HilbertSpace HilbertSpace::compose(const HilbertSpace& other) const {
  std::vector<Factor> fs = factors_;
  fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
  return HilbertSpace(std::move(fs));
}

const Factor& HilbertSpace::factor(int i) const {
  if (i < 0 || i >= num_factors()) {
    throw std::invalid_argument("HilbertSpace: factor index out of range");
  }
  return factors_[static_cast<size_t>(i)];
}

int HilbertSpace::max_boson_level() const {
  int level = -1;
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::Boson) level = std::max(level, f.dim - 1);
  }
  return level;
}

bool HilbertSpace::operator==(const HilbertSpace& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].kind != other.factors_[i].kind ||
        factors_[i].dim != other.factors_[i].dim) {
      return false;
    }
  }
  return true;
}

Operator::Operator(HilbertSpace space, Matrix m)
    : space_(std::move(space)), mat_(std::move(m)) {
  if (mat_.rows() != space_.dim() || mat_.cols() != space_.dim()) {
    throw std::invalid_argument("Operator: matrix dimension does not match space");
  }
}

Operator Operator::dag() const { return Operator(space_, mat_.adjoint()); }

bool Operator::is_hermitian(double rel_tol) const {
  const double n = mat_.norm();
  const double dev = (mat_ - mat_.adjoint()).norm();
  return n == 0.0 ? dev == 0.0 : dev / n < rel_tol;
}

Operator Operator::operator+(const Operator& o) const {
  if (space_ != o.space_) throw std::invalid_argument("Operator+: space mismatch");
  return Operator(space_, mat_ + o.mat_);
}

Operator Operator::operator-(const Operator& o) const {
  if (space_ != o.space_) throw std::invalid_argument("Operator-: space mismatch");
  return Operator(space_, mat_ - o.mat_);
}

Operator Operator::operator*(const Operator& o) const {
  if (space_ != o.space_) throw std::invalid_argument("Operator*: space mismatch");
  return Operator(space_, mat_ * o.mat_);
}

Operator operator*(Complex c, const Operator& o) {
  return Operator(o.space_, c * o.mat_);
}

Operator operator*(double c, const Operator& o) {
  return Operator(o.space_, c * o.mat_);
}

Operator tensor(const Operator& a, const Operator& b) {
  return Operator(a.space().compose(b.space()),
                  Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval());
}

Operator identity(const HilbertSpace& space) {
  return Operator(space, Matrix::Identity(space.dim(), space.dim()));
}

Operator sigma_x(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Qubit, "sigma_x");
  return embed(space, factor, local_sigma('x'));
}

Operator sigma_y(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Qubit, "sigma_y");
  return embed(space, factor, local_sigma('y'));
}

Operator sigma_z(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Qubit, "sigma_z");
  return embed(space, factor, local_sigma('z'));
}

Operator sigma_plus(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Qubit, "sigma_plus");
  return embed(space, factor, local_sigma('+'));
}

Operator sigma_minus(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Qubit, "sigma_minus");
  return embed(space, factor, local_sigma('-'));
}

Operator annihilate(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Boson, "annihilate");
  return embed(space, factor, local_annihilate(space.factor(factor).dim));
}

Operator create(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Boson, "create");
  return embed(space, factor, local_annihilate(space.factor(factor).dim).adjoint());
}

Operator number(const HilbertSpace& space, int factor) {
  check_factor(space, factor, FactorKind::Boson, "number");
  const int d = space.factor(factor).dim;
  Matrix n = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = double(k);
  return embed(space, factor, n);
}

Vector basis_ket(const HilbertSpace& space, const std::vector<int>& levels) {
  if (static_cast<int>(levels.size()) != space.num_factors()) {
    throw std::invalid_argument("basis_ket: one level per factor required");
  }
  int index = 0;
  for (int i = 0; i < space.num_factors(); ++i) {
    const int d = space.factor(i).dim;
    if (levels[static_cast<size_t>(i)] < 0 || levels[static_cast<size_t>(i)] >= d) {
      throw std::invalid_argument("basis_ket: level out of range");
    }
    index = index * d + levels[static_cast<size_t>(i)];
  }
  Vector v = Vector::Zero(space.dim());
  v(index) = 1.0;
  return v;
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix m, double positivity_tol)
    : space_(std::move(space)), mat_(std::move(m)) {
  if (mat_.rows() != space_.dim() || mat_.cols() != space_.dim()) {
    throw std::invalid_argument("DensityMatrix: dimension mismatch");
  }
  const double tr_dev = std::abs(mat_.trace() - Complex(1.0));
  if (tr_dev > 1e-9) {
    throw std::invalid_argument("DensityMatrix: trace deviates by " +
                                std::to_string(tr_dev));
  }
  const double n = mat_.norm();
  if (n > 0.0 && (mat_ - mat_.adjoint()).norm() / n > 1e-12) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  const double lam = min_eigenvalue();
  if (lam < -positivity_tol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(lam));
  }
}

DensityMatrix DensityMatrix::from_ket(const HilbertSpace& space, const Vector& psi) {
  if (psi.size() != space.dim()) {
    throw std::invalid_argument("from_ket: dimension mismatch");
  }
  const Vector n = psi / psi.norm();
  return DensityMatrix(space, n * n.adjoint());
}

double DensityMatrix::trace_deviation() const {
  return std::abs(mat_.trace() - Complex(1.0));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mat_ + mat_.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix dissipator(const Operator& L, const Matrix& rho) {
  if (rho.rows() != L.space().dim() || rho.cols() != L.space().dim()) {
    throw std::invalid_argument("dissipator: dimension mismatch");
  }
  const Matrix& l = L.matrix();
  const Matrix ldl = l.adjoint() * l;
  return l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
}

Matrix dissipator(const Operator& L, const DensityMatrix& rho) {
  if (L.space() != rho.space()) {
    throw std::invalid_argument("dissipator: space mismatch");
  }
  return dissipator(L, rho.matrix());
}

}  // namespace magsky
