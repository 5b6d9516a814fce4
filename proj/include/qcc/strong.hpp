// strong.hpp: hold power beyond weak coupling.
//
// When the controller may couple the system to an engineered auxiliary, the
// bound becomes a minimization over joint Hamiltonians from an allowed family
// and joint states tau that reduce to the target:
//   W_min = min_{H, tau : Tr_aux tau = rho*} -sum_i Tr[D_S^i(tau) (T ln tau + H)].
// Families expose a parameter box; the search is grid seeding plus simplex
// refinement, and the result is explicitly a local minimum.
#pragma once

#include <functional>

#include "qcc/optimize.hpp"
#include "qcc/thermo.hpp"

namespace qcc {

// tau candidates subject to the reduction constraint. Parameters are appended
// to the interaction parameters during the search. build receives both so a
// family may re-express its target in the dressed frame.
struct JointStateParametrization {
  RealVector lower, upper;
  std::function<Matrix(const RealVector& interaction, const RealVector& state)> build;
};

struct InteractionFamily {
  RealVector lower, upper;  // interaction parameter box, the allowed set
  std::function<Matrix(const RealVector&)> hamiltonian;  // joint, system (x) auxiliary
  std::function<std::vector<Dissipator>(const RealVector&)> dissipators;
  // Reduction target as the family sees it. Null means the caller supplies a
  // fixed target (minimize_strong's rho_star, or tau's own reduction for bare
  // objective calls).
  std::function<Matrix(const RealVector&)> target;
  JointStateParametrization state;
  Index dim_s = 0;
  Index dim_a = 0;
};

// One fully built candidate.
struct JointModel {
  Matrix hamiltonian;
  std::vector<Dissipator> dissipators;
  Matrix tau;
  Matrix target;
  Index dim_s = 0;
  Index dim_a = 0;
};

JointModel assemble(const InteractionFamily& family, const RealVector& interaction,
                    const RealVector& state);

// Objective at one candidate: checks Tr_aux tau against the target (1e-10 max
// norm) and returns +infinity when any channel flow diverges.
double strong_objective(const JointModel& model, double temp);
double strong_objective(const InteractionFamily& family, const RealVector& params,
                        const Matrix& tau, double temp);

struct StrongMinimum {
  RealVector interaction;
  RealVector state;
  Matrix tau;
  double power = 0.0;
  JointModel model;
  std::size_t evaluations = 0;
  bool local = true;  // grid + simplex; never a global certificate
};

// Search over the concatenated interaction and state boxes. Candidates that
// throw or diverge score +infinity; if nothing evaluates finite the search
// itself throws. rho_star is the reduction target for families that do not
// carry their own.
StrongMinimum minimize_strong(const InteractionFamily& family, const Matrix& rho_star,
                              double temp, std::size_t budget = 400);

// Minimal Frobenius correction bringing tau back onto the reduction
// constraint; hermiticity is preserved, positivity is the caller's problem.
Matrix project_to_reduced_target(const Matrix& tau, const Matrix& target, Index dim_s,
                                 Index dim_a);

// ----------- two-qubit gap-shift construction -----------
//
// System qubit of gap e, auxiliary qubit of gap cal_e >> temp so it stays in
// its ground state, Ising coupling -(eps/2) zeta (x) zeta which shifts the gap
// seen in the auxiliary's ground sector to e + eps. The bath drives
// sigma_-/sigma_+ on the system with detailed balance at the dressed gap (the
// Bohr frequency of the two lowest joint levels). Holding the dressed qubit
// thermal at t_c then costs the weak-coupling qubit power at gap e + eps, so
// raising eps buys exponential rate suppression.

InteractionFamily two_qubit_gap_shift_family(double e, double cal_e, double eps_max,
                                             double temp, double t_c, double gamma);

// The family evaluated at one shift.
double two_qubit_strong(double e, double cal_e, double eps, double temp, double t_c,
                        double gamma);

}  // namespace qcc
