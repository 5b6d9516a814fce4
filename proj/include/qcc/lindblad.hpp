// lindblad.hpp: Markovian generators, their matrix form, steady states,
// and time propagation.
//
// A Dissipator is one noise channel: a weighted set of jump operators
//   D(rho) = sum_k rate_k (L_k rho L_k^+ - {L_k^+ L_k, rho}/2),
// optionally carrying the state it holds invariant and the temperature of
// the bath it represents. An OpenSystem is a Hamiltonian plus channels,
//   L(rho) = -i[H, rho] + sum_i D^i(rho).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcc/linalg.hpp"

namespace qcc {

struct Jump {
  Matrix op;
  double rate = 0.0;
};

struct Dissipator {
  std::string label;
  std::vector<Jump> jumps;
  std::optional<Matrix> invariant_state;
  std::optional<double> bath_temperature;  // rad/s
  double fock_tail_mass = 0.0;             // mass dropped by a Fock truncation
};

struct OpenSystem {
  Matrix hamiltonian;
  std::vector<Dissipator> dissipators;
  Index dim() const { return hamiltonian.rows(); }
};

// Throws invalid_argument on negative rates, non-square or mismatched
// operators, or a non-hermitian Hamiltonian.
void validate(const Dissipator& d, Index dim);
void validate(const OpenSystem& sys);

Matrix dissipator_apply(const Dissipator& d, const Matrix& rho);
Matrix liouvillian_apply(const OpenSystem& sys, const Matrix& rho);

// Largest jump rate, the scale residual certificates are measured against.
double rate_scale(const OpenSystem& sys);

// Upper bound on the spectral radius of L, for choosing propagation steps.
double spectral_bound(const OpenSystem& sys);

// Dense superoperator in column-stacking convention,
//   L = -i (I kron H - H^T kron I)
//       + sum rate (conj(L) kron L - I kron L^+L / 2 - (L^+L)^T kron I / 2).
// Capped at dim 64; larger systems must stay apply-based.
Matrix liouvillian_matrix(const OpenSystem& sys);

struct SteadyStateResult {
  Matrix rho;
  double residual;  // max-norm of L(rho)
};

// Unique trace-one kernel element of L. The kernel dimension is checked with
// a rank-revealing decomposition first; DegenerateSteadyState is thrown when
// it exceeds one, NumericError when the solution cannot be certified.
SteadyStateResult steady_state(const OpenSystem& sys);

// Fixed-step fourth-order Runge-Kutta. Requires dt * spectral_bound < 0.1;
// the state is re-hermitized every step and the trace is watched (drift
// beyond 1e-6 aborts with NumericError).
Matrix propagate(const OpenSystem& sys, Matrix rho, double duration, double dt);

// ----------- channel factories -----------

// Qubit of gap e coupled to a bath at temperature temp: sigma_minus at
// gamma (n+1), sigma_plus at gamma n, with n the Bose occupation of the gap.
Dissipator thermal_qubit_dissipator(double e, double temp, double gamma);

// Truncated oscillator mode: a at gamma (n+1), a^+ at gamma n. The recorded
// invariant state is the renormalized truncated thermal state, which the
// truncated jumps hold exactly. fock_tail_mass records what the truncation
// dropped; values above 1e-8 deserve a warning upstream.
Dissipator thermal_oscillator_dissipator(double omega, double temp, double gamma, Index n_trunc);

// Isotropic qubit depolarizing: sigma_x, sigma_y, sigma_z each at beta/2.
Dissipator depolarizing_dissipator(double beta);

}  // namespace qcc
