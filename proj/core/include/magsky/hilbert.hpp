#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace magsky {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class FactorKind { Qubit, Boson };

struct Factor {
  FactorKind kind;
  int dim;  // qubit = 2, boson = n_max + 1
};

/// Composite Hilbert space: an ordered list of qubit / truncated-boson
/// factors. Boson truncation levels are explicit and travel with the space.
class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<Factor> factors);

  static HilbertSpace qubit();
  static HilbertSpace boson(int n_max);

  /// Concatenates factor lists (tensor-product order).
  HilbertSpace compose(const HilbertSpace& other) const;

  int dim() const { return dim_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const;
  const std::vector<Factor>& factors() const { return factors_; }

  /// Largest boson truncation level in the space, -1 if no boson factor.
  int max_boson_level() const;

  bool operator==(const HilbertSpace& other) const;
  bool operator!=(const HilbertSpace& other) const { return !(*this == other); }

 private:
  std::vector<Factor> factors_;
  int dim_ = 1;
};

/// Dense operator tagged with the space it acts on.
class Operator {
 public:
  Operator(HilbertSpace space, Matrix m);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return mat_; }

  Operator dag() const;
  bool is_hermitian(double rel_tol = 1e-12) const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator*(const Operator& o) const;  // matrix product
  friend Operator operator*(Complex c, const Operator& o);
  friend Operator operator*(double c, const Operator& o);

 private:
  HilbertSpace space_;
  Matrix mat_;
};

/// Kronecker product; factor order is the concatenation of the operands'.
Operator tensor(const Operator& a, const Operator& b);

// Elementary operators embedded by tensor product into the full space.
// Qubit convention: index 0 = excited, sigma_z = |e><e| - |g><g|,
// sigma_minus = |g><e|. Boson ladder entries <n-1|a|n> = sqrt(n).
Operator identity(const HilbertSpace& space);
Operator sigma_x(const HilbertSpace& space, int factor);
Operator sigma_y(const HilbertSpace& space, int factor);
Operator sigma_z(const HilbertSpace& space, int factor);
Operator sigma_plus(const HilbertSpace& space, int factor);
Operator sigma_minus(const HilbertSpace& space, int factor);
Operator annihilate(const HilbertSpace& space, int factor);
Operator create(const HilbertSpace& space, int factor);
Operator number(const HilbertSpace& space, int factor);

/// Basis ket |i0, i1, ...> with one index per factor.
Vector basis_ket(const HilbertSpace& space, const std::vector<int>& levels);

class DensityMatrix {
 public:
  /// Validates trace (1e-9), Hermiticity (1e-12) and min eigenvalue
  /// (>= -positivity_tol); throws std::invalid_argument on violation.
  DensityMatrix(HilbertSpace space, Matrix m, double positivity_tol = 1e-8);

  static DensityMatrix from_ket(const HilbertSpace& space, const Vector& psi);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return mat_; }

  double trace_deviation() const;
  double min_eigenvalue() const;

 private:
  HilbertSpace space_;
  Matrix mat_;
};

/// D[L]rho = L rho L^dag - 1/2 {L^dag L, rho}. Traceless and Hermitian for
/// Hermitian rho.
Matrix dissipator(const Operator& L, const Matrix& rho);
Matrix dissipator(const Operator& L, const DensityMatrix& rho);

}  // namespace magsky
