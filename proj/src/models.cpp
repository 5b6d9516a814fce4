// models.cpp: qubit cooling, sideband cooling, computation error cost.
#include "qcc/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcc/errors.hpp"
#include "qcc/operators.hpp"
#include "qcc/thermo.hpp"
#include "qcc/units.hpp"

namespace qcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

// ----------- holding a qubit cold -----------

double qubit_cool_power(double e, double temp, double t_c, double gamma,
                        QubitCoolMode mode) {
  if (e <= 0.0 || temp <= 0.0 || gamma <= 0.0 || t_c < 0.0)
    throw std::invalid_argument("qubit_cool_power: e, temp, gamma must be > 0, t_c >= 0");
  if (t_c == 0.0) return kInf;

  const double lever = temp / t_c - 1.0;
  if (mode == QubitCoolMode::approx)
    return gamma * thermal_occupation(e, temp) * e * lever;

  // (w - z)/((z - 1)(w + 1)) with z = exp(e/temp), w = exp(e/t_c), divided
  // through by w so large gaps cannot overflow.
  const double num = 1.0 - std::exp(e / temp - e / t_c);
  const double den = std::expm1(e / temp) * (1.0 + std::exp(-e / t_c));
  return gamma * e * lever * num / den;
}

OpenSystem qubit_cooling_system(double e, double temp, double gamma) {
  return OpenSystem{qubit_hamiltonian(e), {thermal_qubit_dissipator(e, temp, gamma)}};
}

// ----------- resolved-sideband cooling -----------

double SidebandModel::n_bar() const { return thermal_occupation(omega, temp); }
double SidebandModel::n_bar_prime() const { return thermal_occupation(aux_omega, temp); }

bool SidebandModel::weak_coupling_ok() const {
  return g < std::min(omega, aux_omega - omega) / 10.0;
}

void validate(const SidebandModel& m) {
  if (!(m.aux_omega > m.omega) || !(m.omega > 0.0))
    throw std::invalid_argument("sideband: need aux_omega > omega > 0");
  if (m.gamma <= 0.0 || m.gamma_prime <= 0.0 || m.temp <= 0.0)
    throw std::invalid_argument("sideband: gamma, gamma_prime, temp must be > 0");
  if (m.g < 0.0) throw std::invalid_argument("sideband: g must be >= 0");
}

SidebandSteadyState sideband_steady_state(const SidebandModel& m) {
  validate(m);
  const double nb = m.n_bar();
  const double nbp = m.n_bar_prime();
  const double kappa = 0.5 * (m.gamma + m.gamma_prime);

  // Unknowns x = (n_a, n_b, Re c, Im c); rows are the four stationarity
  // conditions of the moment equations.
  Matrix a = Matrix::Zero(4, 4);
  Vector rhs = Vector::Zero(4);
  a(0, 0) = -m.gamma;
  a(0, 3) = 2.0 * m.g;
  rhs(0) = -m.gamma * nb;
  a(1, 1) = -m.gamma_prime;
  a(1, 3) = -2.0 * m.g;
  rhs(1) = -m.gamma_prime * nbp;
  a(2, 2) = -kappa;
  a(3, 0) = -m.g;
  a(3, 1) = m.g;
  a(3, 3) = -kappa;
  const Vector x = solve_linear(a, rhs);

  SidebandSteadyState out;
  out.g = m.g;
  out.n_a = x(0).real();
  out.n_b = x(1).real();
  out.c = Complex(x(2).real(), x(3).real());
  out.weak_coupling_ok = m.weak_coupling_ok();

  out.t_eff = m.omega / std::log1p(1.0 / out.n_a);
  const double flux = m.gamma * (nb - out.n_a);  // quanta per second out of the bath
  out.heat_rate = m.omega * flux;
  out.work_rate = (m.aux_omega - m.omega) * flux;
  out.cop = m.omega / (m.aux_omega - m.omega);
  out.cop_ideal = m.temp / out.t_eff - 1.0;
  out.min_work_rate = out.heat_rate * out.cop_ideal;

  out.efficiency_defined = out.work_rate > 0.0;
  out.efficiency = out.efficiency_defined ? out.min_work_rate / out.work_rate : 0.0;
  out.second_law_violation = out.efficiency_defined && out.efficiency > 1.0;

  const double flux_b = m.gamma_prime * (out.n_b - nbp);
  out.flux_residual =
      std::abs(flux - flux_b) / std::max({std::abs(flux), std::abs(flux_b), 1e-300});
  return out;
}

std::vector<SidebandSteadyState> sideband_efficiency_curve(const SidebandModel& m,
                                                           const std::vector<double>& g_grid) {
  if (g_grid.empty()) throw std::invalid_argument("sideband curve: empty grid");
  for (std::size_t i = 0; i < g_grid.size(); ++i) {
    if (g_grid[i] < 0.0) throw std::invalid_argument("sideband curve: g must be >= 0");
    if (i > 0 && !(g_grid[i] > g_grid[i - 1]))
      throw std::invalid_argument("sideband curve: grid must be strictly increasing");
  }
  std::vector<SidebandSteadyState> rows;
  rows.reserve(g_grid.size());
  SidebandModel point = m;
  for (const double g : g_grid) {
    point.g = g;
    rows.push_back(sideband_steady_state(point));
  }
  return rows;
}

OpenSystem sideband_joint_system(const SidebandModel& m, Index n_trunc) {
  validate(m);
  if (n_trunc < 2) throw std::invalid_argument("sideband joint: n_trunc must be >= 2");
  const Matrix a = annihilation(n_trunc);
  const Matrix id = identity(n_trunc);

  OpenSystem sys;
  sys.hamiltonian = m.g * (kron(a.adjoint(), a) + kron(a, a.adjoint()));

  Dissipator mech = thermal_oscillator_dissipator(m.omega, m.temp, m.gamma, n_trunc);
  Dissipator aux = thermal_oscillator_dissipator(m.aux_omega, m.temp, m.gamma_prime, n_trunc);
  for (auto& j : mech.jumps) j.op = kron(j.op, id);
  for (auto& j : aux.jumps) j.op = kron(id, j.op);
  mech.invariant_state.reset();  // single-mode fixed points do not lift to the pair
  aux.invariant_state.reset();
  mech.label = "mechanical bath";
  aux.label = "auxiliary bath";
  sys.dissipators = {std::move(mech), std::move(aux)};
  return sys;
}

SidebandModel teufel_model(double gamma_prime_hz, double g_hz) {
  SidebandModel m;
  m.omega = angular_from_hz(10.56e6);
  m.aux_omega = angular_from_hz(1.54e9);
  m.gamma = angular_from_hz(32.0);
  m.gamma_prime = angular_from_hz(gamma_prime_hz);
  m.g = angular_from_hz(g_hz);
  m.temp = angular_from_kelvin(0.020);
  return m;
}

// ----------- refrigerator identity on a truncated mode -----------

RefrigeratorCheck refrigerator_identity(double omega, double temp, double gamma,
                                        Index n_trunc, double t_eff) {
  if (omega <= 0.0 || temp <= 0.0 || gamma <= 0.0 || t_eff <= 0.0)
    throw std::invalid_argument("refrigerator_identity: all rates must be > 0");

  OpenSystem sys;
  sys.hamiltonian = oscillator_hamiltonian(omega, n_trunc);
  sys.dissipators = {thermal_oscillator_dissipator(omega, temp, gamma, n_trunc)};
  const Matrix rho = truncated_thermal_state(omega, t_eff, n_trunc);

  const ControlCostReport report = min_work_rate(sys, rho, temp);

  RefrigeratorCheck check;
  check.omega = omega;
  check.temp = temp;
  check.t_eff = t_eff;
  check.gamma = gamma;
  check.n_trunc = n_trunc;
  check.n_bar = thermal_occupation(omega, temp);
  check.n_eff = (rho * number_operator(n_trunc)).trace().real();
  check.heat_rate = report.channels.at(0).energy_flow;
  check.entropy_flow = report.channels.at(0).entropy_flow;
  check.min_work = report.min_work_rate;
  check.work_identity = check.heat_rate * (temp / t_eff - 1.0);
  check.entropy_identity = check.heat_rate / t_eff;
  check.tail_mass = sys.dissipators.at(0).fock_tail_mass;

  const double work_floor = 1e-12 * gamma * omega * (check.n_bar + 1.0);
  check.work_rel_err = std::abs(check.min_work - check.work_identity) /
                       std::max(std::abs(check.work_identity), work_floor);
  check.entropy_rel_err = std::abs(check.entropy_flow - check.entropy_identity) /
                          std::max(std::abs(check.entropy_identity), work_floor / omega);
  check.ok = check.work_rel_err <= 1e-8 && check.entropy_rel_err <= 1e-8;
  return check;
}

RefrigeratorCheck sideband_min_power_consistency(const SidebandModel& m, bool scaled,
                                                 Index n_trunc) {
  SidebandModel use = m;
  if (scaled) use.temp = use.omega / std::log(1.5);  // mechanical occupation 2
  const SidebandSteadyState point = sideband_steady_state(use);
  return refrigerator_identity(use.omega, use.temp, use.gamma, n_trunc, point.t_eff);
}

// ----------- error cost of a quantum computation -----------

QcCost qc_free_energy_loss(double gamma, double beta, double tau_gate, double e,
                           double temp, QcMode mode, std::size_t samples,
                           std::uint64_t seed) {
  if (gamma < 0.0 || beta < 0.0 || tau_gate <= 0.0 || e < 0.0 || temp <= 0.0)
    throw std::invalid_argument(
        "qc_free_energy_loss: rates must be >= 0, tau_gate and temp > 0");

  QcCost cost;
  cost.p_beta = beta * tau_gate;
  cost.p_gamma = gamma * tau_gate / 2.0;

  if (mode == QcMode::formula) {
    cost.range_warning = cost.p_beta >= 0.05 || cost.p_gamma >= 0.05;
    cost.work = cost.p_gamma * e - temp * (plogp(cost.p_beta) + plogp(cost.p_gamma));
    return cost;
  }

  if (samples == 0) throw std::invalid_argument("qc_free_energy_loss: samples must be > 0");

  OpenSystem sys;
  sys.hamiltonian = Matrix::Zero(2, 2);
  if (gamma > 0.0) {
    Dissipator damping;
    damping.label = "zero-temperature damping";
    damping.jumps = {{sigma_minus(), gamma}};
    damping.invariant_state = projector(2, 0);
    sys.dissipators.push_back(std::move(damping));
  }
  if (beta > 0.0) sys.dissipators.push_back(depolarizing_dissipator(beta));

  const Matrix h = qubit_hamiltonian(e);
  const double dt =
      sys.dissipators.empty()
          ? tau_gate
          : std::min(tau_gate, 0.05 / std::max(spectral_bound(sys), 1e-300));

  Rng rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vector psi = haar_random_pure_state(2, rng);
    const Matrix rho0 = psi * psi.adjoint();
    const Matrix rho1 = propagate(sys, rho0, tau_gate, dt);
    const double w = free_energy(rho0, h, temp) - free_energy(rho1, h, temp);
    sum += w;
    sum_sq += w * w;
  }
  const double n = static_cast<double>(samples);
  cost.samples = samples;
  cost.work = sum / n;
  if (samples > 1) {
    const double var = std::max(0.0, (sum_sq - n * cost.work * cost.work) / (n - 1.0));
    cost.std_error = std::sqrt(var / n);
  }
  return cost;
}

double qc_computation_cost(double per_qubit, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("qc_computation_cost: m must be >= 0");
  return per_qubit * static_cast<double>(m);
}

}  // namespace qcc
