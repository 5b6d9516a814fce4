// strong.cpp: strong-coupling objective and family search.
#include "qcc/strong.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qcc/errors.hpp"
#include "qcc/operators.hpp"

namespace qcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReductionTol = 1e-10;

void check_box(const RealVector& lo, const RealVector& hi, const char* who) {
  if (lo.size() != hi.size())
    throw std::invalid_argument(std::string(who) + ": bound sizes differ");
  for (Index i = 0; i < lo.size(); ++i)
    if (!(lo(i) <= hi(i))) throw std::invalid_argument(std::string(who) + ": lower > upper");
}

void check_inside(const RealVector& x, const RealVector& lo, const RealVector& hi,
                  const char* who) {
  if (x.size() != lo.size())
    throw std::invalid_argument(std::string(who) + ": parameter count mismatch");
  for (Index i = 0; i < x.size(); ++i) {
    const double slack = 1e-12 * (1.0 + hi(i) - lo(i));
    if (x(i) < lo(i) - slack || x(i) > hi(i) + slack)
      throw std::invalid_argument(std::string(who) + ": parameter outside bounds");
  }
}

}  // namespace

JointModel assemble(const InteractionFamily& family, const RealVector& interaction,
                    const RealVector& state) {
  check_inside(interaction, family.lower, family.upper, "assemble");
  check_inside(state, family.state.lower, family.state.upper, "assemble (state)");
  JointModel model;
  model.dim_s = family.dim_s;
  model.dim_a = family.dim_a;
  model.hamiltonian = family.hamiltonian(interaction);
  model.dissipators = family.dissipators(interaction);
  model.tau = family.state.build(interaction, state);
  model.target = family.target ? family.target(interaction)
                               : partial_trace_aux(model.tau, model.dim_s, model.dim_a);
  return model;
}

double strong_objective(const JointModel& model, double temp) {
  if (model.dim_s < 1 || model.dim_a < 1)
    throw std::invalid_argument("strong_objective: factor dimensions unset");
  const Index d = model.dim_s * model.dim_a;
  if (model.tau.rows() != d || model.tau.cols() != d)
    throw std::invalid_argument("strong_objective: tau is not on the joint space");

  const Matrix reduced = partial_trace_aux(model.tau, model.dim_s, model.dim_a);
  const double defect = (reduced - model.target).cwiseAbs().maxCoeff();
  if (defect > kReductionTol)
    throw std::invalid_argument("strong_objective: Tr_aux tau misses the target by " +
                                std::to_string(defect));

  OpenSystem sys{model.hamiltonian, model.dissipators};
  validate(sys);
  return min_work_rate(sys, model.tau, temp).min_work_rate;
}

double strong_objective(const InteractionFamily& family, const RealVector& params,
                        const Matrix& tau, double temp) {
  check_inside(params, family.lower, family.upper, "strong_objective");
  JointModel model;
  model.dim_s = family.dim_s;
  model.dim_a = family.dim_a;
  model.hamiltonian = family.hamiltonian(params);
  model.dissipators = family.dissipators(params);
  model.tau = tau;
  model.target = family.target ? family.target(params)
                               : partial_trace_aux(tau, family.dim_s, family.dim_a);
  return strong_objective(model, temp);
}

StrongMinimum minimize_strong(const InteractionFamily& family, const Matrix& rho_star,
                              double temp, std::size_t budget) {
  check_box(family.lower, family.upper, "minimize_strong");
  check_box(family.state.lower, family.state.upper, "minimize_strong (state)");
  if (!family.hamiltonian || !family.dissipators || !family.state.build)
    throw std::invalid_argument("minimize_strong: family builders unset");

  const Index n_p = family.lower.size();
  const Index n_q = family.state.lower.size();

  const auto build = [&](const RealVector& p, const RealVector& q) {
    JointModel model;
    model.dim_s = family.dim_s;
    model.dim_a = family.dim_a;
    model.hamiltonian = family.hamiltonian(p);
    model.dissipators = family.dissipators(p);
    model.tau = family.state.build(p, q);
    model.target = family.target ? family.target(p) : rho_star;
    return model;
  };
  const auto score = [&](const RealVector& p, const RealVector& q) {
    try {
      return strong_objective(build(p, q), temp);
    } catch (const NumericError&) {
      return kInf;
    } catch (const std::invalid_argument&) {
      return kInf;
    }
  };

  StrongMinimum best;
  best.local = true;

  if (n_p + n_q == 0) {
    const RealVector empty(0);
    best.interaction = empty;
    best.state = empty;
    best.power = score(empty, empty);
    best.evaluations = 1;
  } else {
    RealVector lo(n_p + n_q), hi(n_p + n_q);
    lo << family.lower, family.state.lower;
    hi << family.upper, family.state.upper;
    const auto split_p = [&](const RealVector& x) { return RealVector(x.head(n_p)); };
    const auto split_q = [&](const RealVector& x) { return RealVector(x.tail(n_q)); };

    MinimizeOptions opts;
    opts.budget = budget;
    const MinimizeResult found =
        minimize_box([&](const RealVector& x) { return score(split_p(x), split_q(x)); }, lo,
                     hi, opts);
    best.interaction = split_p(found.x);
    best.state = split_q(found.x);
    best.power = found.value;
    best.evaluations = found.evaluations;
  }

  if (!std::isfinite(best.power))
    throw NumericError("minimize_strong: every candidate diverged or failed");
  best.model = build(best.interaction, best.state);
  best.tau = best.model.tau;
  return best;
}

Matrix project_to_reduced_target(const Matrix& tau, const Matrix& target, Index dim_s,
                                 Index dim_a) {
  if (target.rows() != dim_s || target.cols() != dim_s)
    throw std::invalid_argument("project_to_reduced_target: target dimension mismatch");
  const Matrix defect = target - partial_trace_aux(tau, dim_s, dim_a);
  return tau + kron(defect, Matrix::Identity(dim_a, dim_a) / static_cast<double>(dim_a));
}

// ----------- two-qubit gap-shift construction -----------

namespace {

void check_gap_shift_args(double e, double cal_e, double eps_max, double temp, double t_c,
                          double gamma) {
  if (e <= 0.0 || temp <= 0.0 || t_c <= 0.0 || gamma <= 0.0)
    throw std::invalid_argument("two_qubit_gap_shift: e, temp, t_c, gamma must be > 0");
  if (eps_max < 0.0)
    throw std::invalid_argument("two_qubit_gap_shift: shift must be >= 0");
  if (!(cal_e > e) || !(cal_e > eps_max))
    throw std::invalid_argument(
        "two_qubit_gap_shift: auxiliary gap must exceed both the system gap and the shift");
}

}  // namespace

InteractionFamily two_qubit_gap_shift_family(double e, double cal_e, double eps_max,
                                             double temp, double t_c, double gamma) {
  check_gap_shift_args(e, cal_e, eps_max, temp, t_c, gamma);

  Matrix zeta(2, 2);
  zeta << -1.0, 0.0, 0.0, 1.0;  // -1 on the ground state
  const Matrix id = identity(2);

  InteractionFamily family;
  family.dim_s = 2;
  family.dim_a = 2;
  family.lower = RealVector::Constant(1, 0.0);
  family.upper = RealVector::Constant(1, eps_max);
  family.hamiltonian = [=](const RealVector& p) {
    const double eps = p(0);
    return Matrix(0.5 * e * kron(zeta, id) - 0.5 * eps * kron(zeta, zeta) +
                  0.5 * cal_e * kron(id, zeta));
  };
  family.dissipators = [=](const RealVector& p) {
    // Detailed balance at the Bohr frequency of the two lowest joint levels,
    // which the coupling has pushed out to e + eps.
    const double gap = e + p(0);
    const double n = thermal_occupation(gap, temp);
    Dissipator bath;
    bath.label = "dressed thermal bath";
    bath.bath_temperature = temp;
    bath.jumps = {{kron(sigma_minus(), id), gamma * (n + 1.0)},
                  {kron(sigma_plus(), id), gamma * n}};
    return std::vector<Dissipator>{bath};
  };
  family.target = [=](const RealVector& p) {
    return gibbs_state(qubit_hamiltonian(e + p(0)), t_c);
  };
  family.state.lower = RealVector(0);
  family.state.upper = RealVector(0);
  family.state.build = [=](const RealVector& p, const RealVector&) {
    return kron(gibbs_state(qubit_hamiltonian(e + p(0)), t_c), projector(2, 0));
  };
  return family;
}

double two_qubit_strong(double e, double cal_e, double eps, double temp, double t_c,
                        double gamma) {
  check_gap_shift_args(e, cal_e, eps, temp, t_c, gamma);
  const InteractionFamily family =
      two_qubit_gap_shift_family(e, cal_e, eps, temp, t_c, gamma);
  RealVector p(1);
  p << eps;
  const Matrix tau = family.state.build(p, RealVector(0));
  return strong_objective(family, p, tau, temp);
}

}  // namespace qcc
