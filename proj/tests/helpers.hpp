// helpers.hpp: independent oracles and random fixtures for the test suite.
//
// Everything here recomputes physics through the most literal path available
// (explicit loops, raw eigendecompositions, textbook formulas) so agreement
// with the library is meaningful.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

#include "qcc/lindblad.hpp"
#include "qcc/operators.hpp"

namespace testutil {

using qcc::Complex;
using qcc::Index;
using qcc::Matrix;
using qcc::Vector;

inline double uniform01(qcc::Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(qcc::Rng& rng) {
  double u = uniform01(rng);
  while (u == 0.0) u = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * uniform01(rng));
}

inline Matrix random_ginibre(Index d, qcc::Rng& rng) {
  Matrix g(d, d);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) g(r, c) = Complex(gaussian(rng), gaussian(rng));
  return g;
}

// Full-rank random density matrix: Ginibre state mixed with the maximally
// mixed state so the smallest eigenvalue stays away from zero.
inline Matrix random_density(Index d, qcc::Rng& rng, double mix = 0.1) {
  const Matrix g = random_ginibre(d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (1.0 - mix) * rho + mix / static_cast<double>(d) * Matrix::Identity(d, d);
  return 0.5 * (rho + rho.adjoint());
}

inline Matrix random_hermitian(Index d, qcc::Rng& rng) {
  const Matrix g = random_ginibre(d, rng);
  return 0.5 * (g + g.adjoint());
}

// Dissipator action written as bare loops over jumps.
inline Matrix naive_dissipator(const qcc::Dissipator& d, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const qcc::Jump& j : d.jumps) {
    const Matrix ldl = j.op.adjoint() * j.op;
    out += j.rate * (j.op * rho * j.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

inline Matrix naive_liouvillian(const qcc::OpenSystem& sys, const Matrix& rho) {
  Matrix out = Complex(0.0, -1.0) * (sys.hamiltonian * rho - rho * sys.hamiltonian);
  for (const qcc::Dissipator& d : sys.dissipators) out += naive_dissipator(d, rho);
  return out;
}

inline Eigen::VectorXd eigenvalues_of(const Matrix& rho) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(rho).eigenvalues();
}

inline Matrix naive_log(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Eigen::VectorXd logs = es.eigenvalues();
  for (Index i = 0; i < logs.size(); ++i) logs(i) = std::log(logs(i));
  return es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint();
}

inline double naive_entropy(const Matrix& rho) {
  const Eigen::VectorXd p = eigenvalues_of(rho);
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i)
    if (p(i) > 1e-15) s -= p(i) * std::log(p(i));
  return s;
}

// The hold-power bound evaluated the long way around: full-rank targets only.
inline double naive_min_work(const qcc::OpenSystem& sys, const Matrix& rho, double temp) {
  const Matrix potential = temp * naive_log(rho) + sys.hamiltonian;
  double total = 0.0;
  for (const qcc::Dissipator& d : sys.dissipators)
    total -= (naive_dissipator(d, rho) * potential).trace().real();
  return total;
}

// Depolarizing channel written as the double-commutator it abbreviates.
inline Matrix depolarizing_double_commutator(double beta, const Matrix& rho) {
  const Matrix paulis[3] = {qcc::pauli_x(), qcc::pauli_y(), qcc::pauli_z()};
  Matrix out = Matrix::Zero(2, 2);
  for (const Matrix& s : paulis) {
    const Matrix inner = s * rho - rho * s;
    out -= 0.25 * beta * (s * inner - inner * s);
  }
  return out;
}

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testutil
