// thermo.cpp

#include "qcc/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace qcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_state(const Matrix& rho, const char* who) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument(std::string(who) + ": not square");
  if (!is_hermitian(rho)) throw std::invalid_argument(std::string(who) + ": not hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument(std::string(who) + ": trace is not 1");
}

double channel_rate_scale(const Dissipator& d) {
  double r = 0.0;
  for (const Jump& j : d.jumps) r = std::max(r, j.rate);
  return r;
}

// Flows evaluated in the eigenbasis of rho, reusing an already computed
// logarithm. Directions where rho lost support only matter if the channel
// actually moves weight there.
ChannelFlow flows_with_log(const Dissipator& d, const Matrix& rho, const Matrix& h, double temp,
                           const MatrixLog& log_rho) {
  ChannelFlow out;
  out.label = d.label;
  const Matrix drho = dissipator_apply(d, rho);
  out.energy_flow = (drho * h).trace().real();

  const Matrix in_basis = log_rho.spectrum.vectors.adjoint() * drho * log_rho.spectrum.vectors;
  const double tol =
      1e-10 * std::max(channel_rate_scale(d), drho.cwiseAbs().maxCoeff());
  double s = 0.0;
  for (Index k = 0; k < rho.rows(); ++k) {
    const double weight = in_basis(k, k).real();
    if (log_rho.deficient[static_cast<std::size_t>(k)]) {
      if (std::abs(weight) > tol) {
        out.divergent = true;
        break;
      }
      continue;  // no weight on the missing direction, limit contributes 0
    }
    s -= weight * std::log(log_rho.spectrum.values(k));
  }
  if (out.divergent) {
    out.entropy_flow = kInf;
    out.free_energy_rate = -kInf;
  } else {
    out.entropy_flow = s;
    out.free_energy_rate = out.energy_flow - temp * out.entropy_flow;
  }
  return out;
}

}  // namespace

double von_neumann_entropy(const Matrix& rho) {
  check_state(rho, "von_neumann_entropy");
  const HermitianSpectrum s = hermitian_eig(rho);
  double out = 0.0;
  for (Index k = 0; k < s.values.size(); ++k) {
    const double lam = s.values(k);
    if (lam < -1e-10)
      throw std::invalid_argument("von_neumann_entropy: eigenvalue below -1e-10");
    if (lam > 0.0) out -= lam * std::log(lam);
  }
  return out;
}

double free_energy(const Matrix& rho, const Matrix& h, double temp) {
  return (rho * h).trace().real() - temp * von_neumann_entropy(rho);
}

double relative_entropy(const Matrix& rho, const Matrix& sigma) {
  check_state(rho, "relative_entropy: rho");
  check_state(sigma, "relative_entropy: sigma");
  if (rho.rows() != sigma.rows())
    throw std::invalid_argument("relative_entropy: dimension mismatch");

  double tr_rho_ln_rho = 0.0;
  {
    const HermitianSpectrum s = hermitian_eig(rho);
    for (Index k = 0; k < s.values.size(); ++k) {
      const double lam = s.values(k);
      if (lam < -1e-10)
        throw std::invalid_argument("relative_entropy: rho eigenvalue below -1e-10");
      if (lam > 0.0) tr_rho_ln_rho += lam * std::log(lam);
    }
  }

  const MatrixLog ls = matrix_ln_hermitian(sigma);
  double tr_rho_ln_sigma = 0.0;
  for (Index k = 0; k < sigma.rows(); ++k) {
    const double weight =
        (ls.spectrum.vectors.col(k).adjoint() * rho * ls.spectrum.vectors.col(k))(0).real();
    if (ls.deficient[static_cast<std::size_t>(k)]) {
      if (weight > 1e-12) return kInf;  // rho leaves the support of sigma
      continue;
    }
    tr_rho_ln_sigma += weight * std::log(ls.spectrum.values(k));
  }
  return tr_rho_ln_rho - tr_rho_ln_sigma;
}

ChannelFlow channel_flows(const Dissipator& d, const Matrix& rho, const Matrix& h, double temp) {
  check_state(rho, "channel_flows");
  validate(d, rho.rows());
  return flows_with_log(d, rho, h, temp, matrix_ln_hermitian(rho));
}

ControlCostReport min_work_rate(const OpenSystem& sys, const Matrix& rho_star, double temp) {
  validate(sys);
  check_state(rho_star, "min_work_rate");
  if (rho_star.rows() != sys.dim())
    throw std::invalid_argument("min_work_rate: state dimension does not match the system");
  if (temp <= 0.0) throw std::invalid_argument("min_work_rate: temp must be > 0");

  const MatrixLog log_rho = matrix_ln_hermitian(rho_star);
  ControlCostReport report;
  report.temperature = temp;
  report.support_deficient = log_rho.support_deficient;
  double total = 0.0;
  for (const Dissipator& d : sys.dissipators) {
    ChannelFlow f = flows_with_log(d, rho_star, sys.hamiltonian, temp, log_rho);
    report.divergent = report.divergent || f.divergent;
    if (!report.divergent) total += temp * f.entropy_flow - f.energy_flow;
    report.channels.push_back(std::move(f));
  }
  report.min_work_rate = report.divergent ? kInf : total;
  return report;
}

TrajectoryWork trajectory_min_work(const OpenSystem& sys, const std::vector<Matrix>& path,
                                   double duration, double temp) {
  if (path.size() < 2) throw std::invalid_argument("trajectory_min_work: need >= 2 states");
  if (duration <= 0.0) throw std::invalid_argument("trajectory_min_work: duration must be > 0");
  TrajectoryWork out;
  for (const Matrix& rho : path) {
    const ControlCostReport r = min_work_rate(sys, rho, temp);
    out.divergent = out.divergent || r.divergent;
    out.rates.push_back(r.min_work_rate);
  }
  if (out.divergent) {
    out.work = kInf;
    return out;
  }
  const double h = duration / static_cast<double>(path.size() - 1);
  double acc = 0.5 * (out.rates.front() + out.rates.back());
  for (std::size_t i = 1; i + 1 < out.rates.size(); ++i) acc += out.rates[i];
  out.work = h * acc;
  return out;
}

double spohn_entropy_production(const Dissipator& d, const Matrix& tau, const Matrix& pi) {
  check_state(tau, "spohn_entropy_production: tau");
  check_state(pi, "spohn_entropy_production: pi");
  validate(d, tau.rows());

  const MatrixLog log_pi = matrix_ln_hermitian(pi);
  if (log_pi.support_deficient)
    throw std::invalid_argument("spohn_entropy_production: pi must be full rank");
  const double scale = std::max(channel_rate_scale(d), 1e-300);
  const double inv_residual = dissipator_apply(d, pi).cwiseAbs().maxCoeff();
  if (inv_residual > 1e-8 * scale)
    throw std::invalid_argument(
        "spohn_entropy_production: pi is not invariant under the channel");

  // -Tr[D(tau) ln tau] via the flow machinery (temp enters nowhere here);
  // +Tr[D(tau) ln pi] directly.
  const MatrixLog log_tau = matrix_ln_hermitian(tau);
  const ChannelFlow f = flows_with_log(d, tau, Matrix::Zero(tau.rows(), tau.cols()), 1.0, log_tau);
  if (f.divergent) return kInf;
  const Matrix dtau = dissipator_apply(d, tau);
  return f.entropy_flow + (dtau * log_pi.value).trace().real();
}

EnergyBalance joint_energy_balance(const OpenSystem& sys, const Matrix& tau,
                                   std::size_t aux_channel) {
  validate(sys);
  check_state(tau, "joint_energy_balance");
  if (aux_channel >= sys.dissipators.size())
    throw std::invalid_argument("joint_energy_balance: no such channel");
  const double steady_residual = liouvillian_apply(sys, tau).cwiseAbs().maxCoeff();
  if (steady_residual > 1e-8 * std::max(rate_scale(sys), 1e-300))
    throw std::invalid_argument("joint_energy_balance: tau is not a steady state");

  EnergyBalance out;
  for (std::size_t i = 0; i < sys.dissipators.size(); ++i) {
    const double flow =
        (dissipator_apply(sys.dissipators[i], tau) * sys.hamiltonian).trace().real();
    out.energy_flows.push_back(flow);
    out.residual += flow;
    if (i == aux_channel) out.aux_heat_rate = flow;
  }
  return out;
}

ProtocolCheck protocol_step_check(const OpenSystem& sys, const Matrix& rho_star, double temp,
                                  std::vector<double> dts) {
  if (dts.size() < 2) throw std::invalid_argument("protocol_step_check: need >= 2 step sizes");
  for (double dt : dts)
    if (dt <= 0.0) throw std::invalid_argument("protocol_step_check: dts must be > 0");
  std::sort(dts.begin(), dts.end(), std::greater<>());

  const ControlCostReport ref = min_work_rate(sys, rho_star, temp);
  if (ref.divergent)
    throw NumericError("protocol_step_check: hold power diverges at this target");

  ProtocolCheck out;
  out.dts = dts;
  out.reference = ref.min_work_rate;
  const double f0 = free_energy(rho_star, sys.hamiltonian, temp);
  const Matrix flow = liouvillian_apply(sys, rho_star);
  for (double dt : dts) {
    const Matrix stepped = hermitize(rho_star + dt * flow);
    out.estimates.push_back((f0 - free_energy(stepped, sys.hamiltonian, temp)) / dt);
  }

  // Convergence order: straight-line fit of ln|estimate - reference| vs ln dt.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    const double err = std::abs(out.estimates[i] - out.reference);
    if (err == 0.0) continue;
    const double x = std::log(dts[i]);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  out.slope = n >= 2 ? (sxy - sx * sy / n) / (sxx - sx * sx / n) : 1.0;

  // dt -> 0 limit from a linear fit through the smallest steps.
  const std::size_t m = std::min<std::size_t>(3, dts.size());
  sx = sy = sxx = sxy = 0.0;
  for (std::size_t i = dts.size() - m; i < dts.size(); ++i) {
    sx += dts[i];
    sy += out.estimates[i];
    sxx += dts[i] * dts[i];
    sxy += dts[i] * out.estimates[i];
  }
  const double denom = sxx - sx * sx / static_cast<double>(m);
  const double c = denom != 0.0 ? (sxy - sx * sy / static_cast<double>(m)) / denom : 0.0;
  out.limit = (sy - c * sx) / static_cast<double>(m);
  return out;
}

}  // namespace qcc
