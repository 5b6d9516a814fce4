// operators.hpp: standard operators and reference states.
//
// Basis conventions: |0> is the qubit ground state, sigma_minus = |0><1|
// lowers, a qubit of gap E has hamiltonian (E/2) diag(-1, +1). Oscillators
// are truncated to n_trunc Fock states.
#pragma once

#include <cmath>

#include "qcc/linalg.hpp"

namespace qcc {

// ----------- qubit operators -----------

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

inline Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

inline Matrix identity(Index d) { return Matrix::Identity(d, d); }

inline Matrix projector(Index d, Index i) {
  Matrix m = Matrix::Zero(d, d);
  m(i, i) = 1;
  return m;
}

// Gap E, ground state |0>.
inline Matrix qubit_hamiltonian(double e) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = -0.5 * e;
  m(1, 1) = 0.5 * e;
  return m;
}

// ----------- ladder operators -----------

inline Matrix annihilation(Index n_trunc) {
  Matrix m = Matrix::Zero(n_trunc, n_trunc);
  for (Index n = 1; n < n_trunc; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return m;
}

inline Matrix creation(Index n_trunc) { return annihilation(n_trunc).adjoint(); }

inline Matrix number_operator(Index n_trunc) {
  Matrix m = Matrix::Zero(n_trunc, n_trunc);
  for (Index n = 0; n < n_trunc; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

inline Matrix oscillator_hamiltonian(double omega, Index n_trunc) {
  return omega * number_operator(n_trunc);
}

// ----------- thermal quantities -----------

// Bose occupation 1/(exp(omega/T) - 1).
inline double thermal_occupation(double omega, double temp) {
  if (omega <= 0.0 || temp <= 0.0)
    throw std::invalid_argument("thermal_occupation: omega and temp must be > 0");
  return 1.0 / std::expm1(omega / temp);
}

// Probability mass the truncation drops from a thermal oscillator state.
inline double thermal_tail_mass(double omega, double temp, Index n_trunc) {
  return std::exp(-static_cast<double>(n_trunc) * omega / temp);
}

// exp(-H/T)/Z, computed spectrally with the ground energy factored out so
// large gaps cannot overflow.
inline Matrix gibbs_state(const Matrix& h, double temp) {
  if (temp <= 0.0) throw std::invalid_argument("gibbs_state: temp must be > 0");
  const HermitianSpectrum s = hermitian_eig(h);
  const double e0 = s.values.minCoeff();
  RealVector w = ((-(s.values.array() - e0)) / temp).exp();
  w /= w.sum();
  return s.vectors * w.matrix().asDiagonal() * s.vectors.adjoint();
}

// Thermal oscillator state restricted to n_trunc levels and renormalized;
// exactly stationary under the matching truncated thermal dissipator.
inline Matrix truncated_thermal_state(double omega, double temp, Index n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("truncated_thermal_state: n_trunc must be >= 1");
  const double q = std::exp(-omega / temp);
  RealVector w(n_trunc);
  for (Index n = 0; n < n_trunc; ++n) w(n) = std::pow(q, static_cast<double>(n));
  w /= w.sum();
  Matrix rho = Matrix::Zero(n_trunc, n_trunc);
  rho.diagonal() = w.cast<Complex>();
  return rho;
}

}  // namespace qcc
