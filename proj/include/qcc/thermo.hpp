// thermo.hpp: thermodynamic bookkeeping for held nonequilibrium states.
//
// The central quantity: to hold a state rho against channels D^i with a
// reference bath at temperature T, an ideal controller pays at least
//   W_min = -sum_i Tr[D^i(rho) (T ln rho + H)]
//         = sum_i (T * Sdot_i - Edot_i),
// where Sdot_i = -Tr[D^i(rho) ln rho] and Edot_i = Tr[D^i(rho) H] are the
// entropy and energy flows through channel i. Pure (rank-deficient) targets
// make Sdot diverge; those come back flagged with value +infinity instead of
// silently clamped.
#pragma once

#include <vector>

#include "qcc/lindblad.hpp"

namespace qcc {

// -Tr[rho ln rho]; tolerates eigenvalues down to -1e-10 and treats 0 ln 0 = 0.
double von_neumann_entropy(const Matrix& rho);

// Tr[rho h] - temp * S(rho).
double free_energy(const Matrix& rho, const Matrix& h, double temp);

// Tr[rho (ln rho - ln sigma)]; +infinity when rho has weight (above 1e-12)
// outside the support of sigma.
double relative_entropy(const Matrix& rho, const Matrix& sigma);

struct ChannelFlow {
  std::string label;
  double entropy_flow = 0.0;      // -Tr[D(rho) ln rho], +inf when divergent
  double energy_flow = 0.0;       // Tr[D(rho) H]
  double free_energy_rate = 0.0;  // energy_flow - temp * entropy_flow
  bool divergent = false;
};

// Flows through one channel at state rho under Hamiltonian h. When rho is
// support-deficient the flow is still finite if the channel has no weight on
// the missing directions; otherwise the row is flagged divergent.
ChannelFlow channel_flows(const Dissipator& d, const Matrix& rho, const Matrix& h, double temp);

struct ControlCostReport {
  double temperature = 0.0;
  double min_work_rate = 0.0;  // +inf when any channel diverges
  bool divergent = false;
  bool support_deficient = false;  // target needed eigenvalue clamping
  std::vector<ChannelFlow> channels;
};

// Minimum power to hold rho_star against every channel of sys, with the
// per-channel decomposition. The report satisfies, as computed,
// min_work_rate = sum (T * entropy_flow - energy_flow) = -sum free_energy_rate.
ControlCostReport min_work_rate(const OpenSystem& sys, const Matrix& rho_star, double temp);

struct TrajectoryWork {
  double work = 0.0;
  bool divergent = false;
  std::vector<double> rates;  // W_min at each path point
};

// Trapezoid integral of the hold power along a uniformly spaced path.
TrajectoryWork trajectory_min_work(const OpenSystem& sys, const std::vector<Matrix>& path,
                                   double duration, double temp);

// Entropy production -Tr[D(tau)(ln tau - ln pi)] of one channel relative to
// its invariant state pi (full rank, checked for invariance). Nonnegative.
double spohn_entropy_production(const Dissipator& d, const Matrix& tau, const Matrix& pi);

struct EnergyBalance {
  double aux_heat_rate = 0.0;            // energy flow through the auxiliary channel
  std::vector<double> energy_flows;      // per channel, auxiliary included
  double residual = 0.0;                 // sum of all flows; 0 at a steady state
};

// Energy closure at a joint steady state: the heat the auxiliary channel
// carries balances the system channels' flows exactly, since
// sum_i Tr[D^i(tau) H] = Tr[L(tau) H] = 0 when L(tau) = 0.
EnergyBalance joint_energy_balance(const OpenSystem& sys, const Matrix& tau,
                                   std::size_t aux_channel);

struct ProtocolCheck {
  std::vector<double> dts;        // sorted descending
  std::vector<double> estimates;  // [F(rho) - F(rho + dt L(rho))]/dt
  double reference = 0.0;         // W_min at rho
  double slope = 0.0;             // log-log convergence order, ~1
  double limit = 0.0;             // dt -> 0 extrapolation of the estimates
};

// Discrete-step consistency check: the free energy a single explicit Euler
// step destroys, per unit time, converges (first order in dt) to W_min.
ProtocolCheck protocol_step_check(const OpenSystem& sys, const Matrix& rho_star, double temp,
                                  std::vector<double> dts);

}  // namespace qcc
