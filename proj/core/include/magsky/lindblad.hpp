#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "magsky/hilbert.hpp"

namespace magsky {

struct Collapse {
  double rate;  // angular frequency units, >= 0
  Operator op;
};

/// Hamiltonian plus (rate, collapse operator) pairs; the unit of simulation.
/// An optional drive term H_d(t) is added to the static Hamiltonian at each
/// right-hand-side evaluation.
class LindbladModel {
 public:
  using DriveFn = std::function<Matrix(double)>;

  LindbladModel(HilbertSpace space, Operator hamiltonian,
                std::vector<Collapse> collapses, DriveFn drive = nullptr);

  const HilbertSpace& space() const { return space_; }
  const Operator& hamiltonian() const { return h_; }
  const std::vector<Collapse>& collapses() const { return collapses_; }
  bool has_drive() const { return static_cast<bool>(drive_); }

  /// -i[H, rho] + sum_k rate_k D[L_k] rho
  Matrix rhs(const Matrix& rho, double t) const;

  /// FNV-1a over the Hamiltonian entries and collapse rates; recorded in
  /// trajectory metadata for provenance.
  std::uint64_t hash() const { return hash_; }

 private:
  HilbertSpace space_;
  Operator h_;
  std::vector<Collapse> collapses_;
  std::vector<Matrix> ldag_l_;  // precomputed L^dag L per collapse
  Matrix m_eff_;                // -iH - 1/2 sum g L^dag L
  DriveFn drive_;
  std::uint64_t hash_ = 0;
};

struct TrajectoryMeta {
  std::uint64_t model_hash = 0;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  int n_max = -1;  // largest boson truncation in the space, -1 if none
  long rhs_evaluations = 0;
  long accepted_steps = 0;
  long rejected_steps = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  TrajectoryMeta meta;
};

/// Adaptive Dormand-Prince 5(4) integration of the master equation with
/// output at the requested times. rel_tol must lie in [1e-12, 1e-4].
/// Emitted states are trace-renormalized when the deviation is below 1e-9;
/// drift beyond 1e-6 or positivity below -1e-6 aborts with diagnostics.
Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0,
                  const std::vector<double>& times, double rel_tol = 1e-8,
                  double abs_tol = 1e-10);

/// tr(rho(t) op) per output time.
std::vector<Complex> expectation(const Trajectory& traj, const Operator& op);

/// Real part of the expectation series; throws if op is Hermitian and any
/// imaginary part exceeds 1e-10.
std::vector<double> expectation_real(const Trajectory& traj, const Operator& op);

struct ObservablePair {
  Operator on_full;
  Operator on_reduced;
};

/// Sup-norm deviation max_t |<O>_full(t) - <O>_reduced(t)| per observable.
/// Requires identical time grids.
std::vector<double> compare_models(const Trajectory& full,
                                   const Trajectory& reduced,
                                   const std::vector<ObservablePair>& observables);

/// Uniform grid [0, t_max] with n points (n >= 2), first point 0.
std::vector<double> time_grid(double t_max, int n);

}  // namespace magsky
