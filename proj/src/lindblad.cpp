// lindblad.cpp

#include "qcc/lindblad.hpp"

#include <cmath>
#include <sstream>

#include "qcc/operators.hpp"

namespace qcc {

void validate(const Dissipator& d, Index dim) {
  for (const Jump& j : d.jumps) {
    if (j.rate < 0.0) {
      std::ostringstream msg;
      msg << "dissipator '" << d.label << "': negative rate " << j.rate;
      throw std::invalid_argument(msg.str());
    }
    if (j.op.rows() != dim || j.op.cols() != dim) {
      std::ostringstream msg;
      msg << "dissipator '" << d.label << "': jump operator is " << j.op.rows() << "x"
          << j.op.cols() << ", expected " << dim << "x" << dim;
      throw std::invalid_argument(msg.str());
    }
  }
  if (d.invariant_state &&
      (d.invariant_state->rows() != dim || d.invariant_state->cols() != dim))
    throw std::invalid_argument("dissipator '" + d.label + "': invariant state has wrong shape");
}

void validate(const OpenSystem& sys) {
  if (sys.hamiltonian.rows() != sys.hamiltonian.cols())
    throw std::invalid_argument("open system: hamiltonian not square");
  if (!is_hermitian(sys.hamiltonian))
    throw std::invalid_argument("open system: hamiltonian not hermitian");
  for (const Dissipator& d : sys.dissipators) validate(d, sys.dim());
}

Matrix dissipator_apply(const Dissipator& d, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Jump& j : d.jumps) {
    if (j.rate == 0.0) continue;
    const Matrix ldag_l = j.op.adjoint() * j.op;
    out.noalias() += j.rate * (j.op * rho * j.op.adjoint());
    out.noalias() -= (0.5 * j.rate) * (ldag_l * rho + rho * ldag_l);
  }
  return out;
}

Matrix liouvillian_apply(const OpenSystem& sys, const Matrix& rho) {
  const Complex i_unit(0.0, 1.0);
  Matrix out = -i_unit * (sys.hamiltonian * rho - rho * sys.hamiltonian);
  for (const Dissipator& d : sys.dissipators) out += dissipator_apply(d, rho);
  return out;
}

double rate_scale(const OpenSystem& sys) {
  double r = 0.0;
  for (const Dissipator& d : sys.dissipators)
    for (const Jump& j : d.jumps) r = std::max(r, j.rate);
  return r;
}

namespace {

double operator_norm_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

double spectral_bound(const OpenSystem& sys) {
  double bound = 2.0 * operator_norm_hermitian(hermitize(sys.hamiltonian));
  for (const Dissipator& d : sys.dissipators)
    for (const Jump& j : d.jumps)
      bound += 2.0 * j.rate * operator_norm_hermitian(j.op.adjoint() * j.op);
  return bound;
}

Matrix liouvillian_matrix(const OpenSystem& sys) {
  validate(sys);
  const Index d = sys.dim();
  if (d > 64)
    throw std::invalid_argument("liouvillian_matrix: dense superoperator capped at dim 64");
  const Matrix id = identity(d);
  const Complex i_unit(0.0, 1.0);
  Matrix l = -i_unit * (kron(id, sys.hamiltonian) - kron(sys.hamiltonian.transpose(), id));
  for (const Dissipator& dis : sys.dissipators) {
    for (const Jump& j : dis.jumps) {
      if (j.rate == 0.0) continue;
      const Matrix ldag_l = j.op.adjoint() * j.op;
      l += j.rate * (kron(j.op.conjugate(), j.op) - 0.5 * kron(id, ldag_l) -
                     0.5 * kron(ldag_l.transpose(), id));
    }
  }
  return l;
}

SteadyStateResult steady_state(const OpenSystem& sys) {
  const Index d = sys.dim();
  const Matrix l = liouvillian_matrix(sys);

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(l);
  cod.setThreshold(1e-8);
  const Index nullity = d * d - cod.rank();
  if (nullity > 1) {
    std::ostringstream msg;
    msg << "steady_state: Liouvillian kernel has dimension " << nullity
        << "; the steady state is not unique";
    throw DegenerateSteadyState(msg.str());
  }

  // Trade one redundant row of L(rho) = 0 for the trace constraint.
  Vector trace_row = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) trace_row(i * d + i) = 1.0;

  Vector x;
  bool solved = false;
  std::string last_error;
  for (const Index row : {Index{0}, d * d - 1, Index{1}}) {
    if (row >= d * d) continue;
    Matrix a = l;
    a.row(row) = trace_row.transpose();
    Vector b = Vector::Zero(d * d);
    b(row) = 1.0;
    try {
      x = solve_linear(a, b);
      solved = true;
      break;
    } catch (const NumericError& e) {
      last_error = e.what();
    }
  }
  if (!solved) throw NumericError("steady_state: all pivot rows failed: " + last_error);

  Matrix rho = hermitize(unvec(x, d));
  HermitianSpectrum s = hermitian_eig(rho);
  if (s.values.minCoeff() < -1e-10) {
    std::ostringstream msg;
    msg << "steady_state: solution has eigenvalue " << s.values.minCoeff() << " below -1e-10";
    throw NumericError(msg.str());
  }
  RealVector clipped = s.values.cwiseMax(0.0);
  clipped /= clipped.sum();
  rho = s.vectors * clipped.cast<Complex>().asDiagonal() * s.vectors.adjoint();
  rho = hermitize(rho);

  const double residual = (l * vec(rho)).cwiseAbs().maxCoeff();
  const double tol = 1e-10 * rate_scale(sys);
  if (residual > tol && tol > 0.0) {
    std::ostringstream msg;
    msg << "steady_state: residual " << residual << " exceeds " << tol;
    throw NumericError(msg.str());
  }
  return {rho, residual};
}

Matrix propagate(const OpenSystem& sys, Matrix rho, double duration, double dt) {
  validate(sys);
  if (duration < 0.0 || dt <= 0.0)
    throw std::invalid_argument("propagate: need duration >= 0 and dt > 0");
  if (duration == 0.0) return rho;
  const double bound = spectral_bound(sys);
  if (dt * bound >= 0.1)
    throw std::invalid_argument("propagate: dt too large for the generator's spectral bound");

  const auto nsteps = static_cast<long>(std::ceil(duration / dt));
  const double h = duration / static_cast<double>(nsteps);
  const double trace0 = rho.trace().real();

  Matrix k1, k2, k3, k4;
  for (long s = 0; s < nsteps; ++s) {
    k1 = liouvillian_apply(sys, rho);
    k2 = liouvillian_apply(sys, rho + (0.5 * h) * k1);
    k3 = liouvillian_apply(sys, rho + (0.5 * h) * k2);
    k4 = liouvillian_apply(sys, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = hermitize(rho);
    const double drift = std::abs(rho.trace().real() - trace0);
    if (!std::isfinite(drift) || drift > 1e-6) {
      std::ostringstream msg;
      msg << "propagate: trace drift " << drift << " after step " << s + 1
          << "; reduce dt";
      throw NumericError(msg.str());
    }
  }
  return rho;
}

Dissipator thermal_qubit_dissipator(double e, double temp, double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("thermal_qubit_dissipator: gamma must be >= 0");
  const double n = thermal_occupation(e, temp);
  Dissipator d;
  d.label = "thermal_qubit";
  d.jumps = {{sigma_minus(), gamma * (n + 1.0)}, {sigma_plus(), gamma * n}};
  d.invariant_state = gibbs_state(qubit_hamiltonian(e), temp);
  d.bath_temperature = temp;
  return d;
}

Dissipator thermal_oscillator_dissipator(double omega, double temp, double gamma,
                                         Index n_trunc) {
  if (gamma < 0.0)
    throw std::invalid_argument("thermal_oscillator_dissipator: gamma must be >= 0");
  if (n_trunc < 2)
    throw std::invalid_argument("thermal_oscillator_dissipator: n_trunc must be >= 2");
  const double n = thermal_occupation(omega, temp);
  Dissipator d;
  d.label = "thermal_oscillator";
  d.jumps = {{annihilation(n_trunc), gamma * (n + 1.0)}, {creation(n_trunc), gamma * n}};
  d.invariant_state = truncated_thermal_state(omega, temp, n_trunc);
  d.bath_temperature = temp;
  d.fock_tail_mass = thermal_tail_mass(omega, temp, n_trunc);
  return d;
}

Dissipator depolarizing_dissipator(double beta) {
  if (beta < 0.0) throw std::invalid_argument("depolarizing_dissipator: beta must be >= 0");
  Dissipator d;
  d.label = "depolarizing";
  d.jumps = {{pauli_x(), 0.5 * beta}, {pauli_y(), 0.5 * beta}, {pauli_z(), 0.5 * beta}};
  d.invariant_state = 0.5 * identity(2);
  return d;
}

}  // namespace qcc
