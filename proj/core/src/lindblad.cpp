#include "magsky/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace magsky {

namespace {

std::uint64_t fnv1a(const void* data, size_t n, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_matrix(const Matrix& m, std::uint64_t h) {
  return fnv1a(m.data(), sizeof(Complex) * static_cast<size_t>(m.size()), h);
}

}  // namespace

LindbladModel::LindbladModel(HilbertSpace space, Operator hamiltonian,
                             std::vector<Collapse> collapses, DriveFn drive)
    : space_(std::move(space)),
      h_(std::move(hamiltonian)),
      collapses_(std::move(collapses)),
      drive_(std::move(drive)) {
  if (h_.space() != space_) {
    throw std::invalid_argument("LindbladModel: Hamiltonian space mismatch");
  }
  if (!h_.is_hermitian(1e-12)) {
    throw std::invalid_argument("LindbladModel: Hamiltonian is not Hermitian");
  }
  for (const auto& c : collapses_) {
    if (c.rate < 0.0) {
      throw std::invalid_argument("LindbladModel: negative collapse rate");
    }
    if (c.op.space() != space_) {
      throw std::invalid_argument("LindbladModel: collapse operator space mismatch");
    }
  }
  ldag_l_.reserve(collapses_.size());
  // Non-Hermitian effective generator M = -iH - 1/2 sum_k g_k L_k^dag L_k,
  // so the rhs needs only M rho + rho M^dag plus the jump terms.
  m_eff_ = Complex(0.0, -1.0) * h_.matrix();
  for (const auto& c : collapses_) {
    ldag_l_.push_back(c.op.matrix().adjoint() * c.op.matrix());
    m_eff_ -= (0.5 * c.rate) * ldag_l_.back();
  }
  std::uint64_t h = 1469598103934665603ull;
  h = hash_matrix(h_.matrix(), h);
  for (const auto& c : collapses_) {
    h = fnv1a(&c.rate, sizeof(double), h);
    h = hash_matrix(c.op.matrix(), h);
  }
  hash_ = h;
}

Matrix LindbladModel::rhs(const Matrix& rho, double t) const {
  Matrix out(rho.rows(), rho.cols());
  if (drive_) {
    Matrix m = m_eff_ + Complex(0.0, -1.0) * drive_(t);
    out.noalias() = m * rho;
    out.noalias() += rho * m.adjoint();
  } else {
    out.noalias() = m_eff_ * rho;
    out.noalias() += rho * m_eff_.adjoint();
  }
  for (size_t k = 0; k < collapses_.size(); ++k) {
    const double g = collapses_[k].rate;
    if (g == 0.0) continue;
    const Matrix& l = collapses_[k].op.matrix();
    out.noalias() += g * (l * rho * l.adjoint());
  }
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0,
                 A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0,
                 A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0,
                 A65 = -5103.0 / 18656.0;
constexpr double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0,
                 B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0;
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;
constexpr double C2 = 1.0 / 5.0, C3 = 3.0 / 10.0, C4 = 4.0 / 5.0,
                 C5 = 8.0 / 9.0;

double error_norm(const Matrix& err, const Matrix& y0, const Matrix& y1,
                  double atol, double rtol) {
  double sum = 0.0;
  const auto n = err.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sc =
        atol + rtol * std::max(std::abs(y0.data()[i]), std::abs(y1.data()[i]));
    const double e = std::abs(err.data()[i]) / sc;
    sum += e * e;
  }
  return std::sqrt(sum / double(n));
}

}  // namespace

Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0,
                  const std::vector<double>& times, double rel_tol,
                  double abs_tol) {
  if (model.space() != rho0.space()) {
    throw std::invalid_argument("evolve: initial state space mismatch");
  }
  if (rel_tol < 1e-12 || rel_tol > 1e-4) {
    throw std::invalid_argument("evolve: rel_tol outside [1e-12, 1e-4]");
  }
  if (times.empty() || times.front() != 0.0) {
    throw std::invalid_argument("evolve: time grid must start at 0");
  }
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw std::invalid_argument("evolve: time grid must be strictly increasing");
    }
  }

  Trajectory traj;
  traj.times = times;
  traj.meta.model_hash = model.hash();
  traj.meta.rel_tol = rel_tol;
  traj.meta.abs_tol = abs_tol;
  traj.meta.n_max = model.space().max_boson_level();

  const double t_end = times.back();
  double t = 0.0;
  Matrix y = rho0.matrix();
  Matrix k1 = model.rhs(y, t);
  traj.meta.rhs_evaluations = 1;

  auto emit = [&](size_t idx, const Matrix& state, double at) {
    Matrix rho = state;
    const double tr_dev = std::abs(rho.trace() - Complex(1.0));
    if (tr_dev >= 1e-9) {
      std::ostringstream os;
      os << "evolve: trace drift " << tr_dev << " at t = " << at
         << " (accepted " << traj.meta.accepted_steps << ", rejected "
         << traj.meta.rejected_steps << " steps, "
         << traj.meta.rhs_evaluations << " rhs evaluations)";
      throw std::runtime_error(os.str());
    }
    rho /= rho.trace().real();
    rho = (0.5 * (rho + rho.adjoint())).eval();  // scrub integration roundoff
    DensityMatrix dm(model.space(), rho, 1e-6);
    if (dm.min_eigenvalue() < -1e-6) {
      std::ostringstream os;
      os << "evolve: positivity violation " << dm.min_eigenvalue()
         << " at t = " << at;
      throw std::runtime_error(os.str());
    }
    traj.states.push_back(std::move(dm));
    (void)idx;
  };

  emit(0, y, 0.0);
  size_t next_out = 1;
  if (next_out >= times.size()) return traj;

  // Initial step size from the local derivative scale.
  double h;
  {
    const double d0 = y.norm();
    const double d1 = k1.norm();
    h = (d1 > 1e-300) ? 0.01 * std::max(d0, 1.0) / d1 : t_end * 1e-4;
    h = std::min(h, t_end * 1e-2);
  }

  const double h_min = t_end * 1e-14;
  Matrix k2, k3, k4, k5, k6, k7, y_new, err;

  while (next_out < times.size()) {
    bool hit_output = false;
    if (t + h >= times[next_out]) {
      h = times[next_out] - t;
      hit_output = true;
    }

    k2 = model.rhs(y + h * (A21 * k1), t + C2 * h);
    k3 = model.rhs(y + h * (A31 * k1 + A32 * k2), t + C3 * h);
    k4 = model.rhs(y + h * (A41 * k1 + A42 * k2 + A43 * k3), t + C4 * h);
    k5 = model.rhs(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4),
                   t + C5 * h);
    k6 = model.rhs(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
                   t + h);
    y_new = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    k7 = model.rhs(y_new, t + h);
    traj.meta.rhs_evaluations += 6;

    err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
    const double en = error_norm(err, y, y_new, abs_tol, rel_tol);

    if (en <= 1.0) {
      t += h;
      y.swap(y_new);
      k1.swap(k7);  // FSAL
      ++traj.meta.accepted_steps;
      if (hit_output) {
        emit(next_out, y, t);
        ++next_out;
      }
    } else {
      ++traj.meta.rejected_steps;
    }

    const double factor =
        std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, 5.0);
    h *= factor;
    if (h < h_min) {
      std::ostringstream os;
      os << "evolve: step collapse at t = " << t << " (h = " << h
         << "); tolerance unattainable";
      throw std::runtime_error(os.str());
    }
  }
  return traj;
}

std::vector<Complex> expectation(const Trajectory& traj, const Operator& op) {
  std::vector<Complex> out;
  out.reserve(traj.states.size());
  for (const auto& s : traj.states) {
    if (s.space() != op.space()) {
      throw std::invalid_argument("expectation: space mismatch");
    }
    out.push_back((s.matrix() * op.matrix()).trace());
  }
  return out;
}

std::vector<double> expectation_real(const Trajectory& traj, const Operator& op) {
  const bool herm = op.is_hermitian();
  auto series = expectation(traj, op);
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& v : series) {
    if (herm && std::abs(v.imag()) > 1e-10) {
      throw std::runtime_error(
          "expectation_real: imaginary part " + std::to_string(v.imag()) +
          " on a Hermitian observable");
    }
    out.push_back(v.real());
  }
  return out;
}

std::vector<double> compare_models(const Trajectory& full,
                                   const Trajectory& reduced,
                                   const std::vector<ObservablePair>& observables) {
  if (full.times != reduced.times) {
    throw std::invalid_argument("compare_models: time grids differ");
  }
  std::vector<double> out;
  out.reserve(observables.size());
  for (const auto& pair : observables) {
    const auto a = expectation(full, pair.on_full);
    const auto b = expectation(reduced, pair.on_reduced);
    double sup = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      sup = std::max(sup, std::abs(a[i] - b[i]));
    }
    out.push_back(sup);
  }
  return out;
}

std::vector<double> time_grid(double t_max, int n) {
  if (n < 2 || t_max <= 0.0) {
    throw std::invalid_argument("time_grid: need n >= 2 and t_max > 0");
  }
  std::vector<double> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = t_max * double(i) / double(n - 1);
  return t;
}

}  // namespace magsky
