// test_models.cpp: qubit cooling, sideband cooling, refrigerator identity,
// computation error cost.
#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "qcc/models.hpp"
#include "qcc/operators.hpp"
#include "qcc/thermo.hpp"
#include "qcc/units.hpp"

using namespace qcc;
using testutil::rel_err;

namespace {

// closed-form steady state of the moment equations, solved by hand
struct SidebandOracle {
  double n_a, n_b, im_c;
};

SidebandOracle sideband_oracle(const SidebandModel& m) {
  const double nb = m.n_bar(), nbp = m.n_bar_prime();
  const double rate = 4.0 * m.g * m.g / (m.gamma + m.gamma_prime);
  const double d = (nb - nbp) / (1.0 + rate / m.gamma + rate / m.gamma_prime);
  return {nb - rate / m.gamma * d, nbp + rate / m.gamma_prime * d,
          -2.0 * m.g * d / (m.gamma + m.gamma_prime)};
}

}  // namespace

TEST_CASE("qubit cooling formula matches the channel-flow route") {
  // same number through two unrelated code paths
  Rng rng(71);
  for (int k = 0; k < 40; ++k) {
    const double e = 0.3 + 3.0 * testutil::uniform01(rng);
    const double temp = 0.3 + 2.0 * testutil::uniform01(rng);
    const double t_c = temp * (0.05 + 0.6 * testutil::uniform01(rng));
    const double gamma = 0.01 + testutil::uniform01(rng);
    const OpenSystem sys = qubit_cooling_system(e, temp, gamma);
    const Matrix target = gibbs_state(sys.hamiltonian, t_c);
    const double flows = min_work_rate(sys, target, temp).min_work_rate;
    CHECK(rel_err(qubit_cool_power(e, temp, t_c, gamma), flows) < 1e-10);
  }
}

TEST_CASE("qubit cooling approximation converges for deep gaps") {
  const double temp = 1.0, t_c = 0.2, gamma = 0.1;
  const double full20 = qubit_cool_power(20.0, temp, t_c, gamma);
  const double approx20 = qubit_cool_power(20.0, temp, t_c, gamma, QubitCoolMode::approx);
  CHECK(rel_err(approx20, full20) < 1e-6);
  // but overestimates at soft gaps
  const double full05 = qubit_cool_power(0.5, temp, t_c, gamma);
  const double approx05 = qubit_cool_power(0.5, temp, t_c, gamma, QubitCoolMode::approx);
  CHECK(approx05 / full05 > 1.05);
}

TEST_CASE("qubit cooling limits") {
  CHECK(std::isinf(qubit_cool_power(1.0, 1.0, 0.0, 0.1)));  // absolute zero target
  CHECK(qubit_cool_power(1.0, 1.0, 1.0, 0.1) == 0.0);       // holding the bath state is free
  // extreme gaps stay finite in the overflow-safe form
  CHECK(std::isfinite(qubit_cool_power(2000.0, 1.0, 0.1, 0.1)));
  CHECK(qubit_cool_power(2000.0, 1.0, 0.1, 0.1) >= 0.0);
  // heating targets (t_c > temp) also cost work
  CHECK(qubit_cool_power(1.0, 1.0, 2.5, 0.1) > 0.0);
}

TEST_CASE("qubit cooling power peaks at an intermediate gap") {
  const double temp = 1.0, t_c = 0.25, gamma = 0.1;
  const double low = qubit_cool_power(0.05, temp, t_c, gamma);
  const double mid = qubit_cool_power(1.5, temp, t_c, gamma);
  const double high = qubit_cool_power(40.0, temp, t_c, gamma);
  CHECK(mid > low);
  CHECK(mid > high);
  CHECK(high < 1e-12 * mid);
}

TEST_CASE("sideband steady state matches the hand-solved moments") {
  SidebandModel m;
  m.omega = 1.0;
  m.aux_omega = 25.0;
  m.g = 0.8;
  m.gamma = 0.9;
  m.gamma_prime = 3.1;
  m.temp = 1.0 / std::log(1.5);  // n_bar = 2
  const SidebandSteadyState s = sideband_steady_state(m);
  const SidebandOracle o = sideband_oracle(m);
  CHECK(rel_err(s.n_a, o.n_a) < 1e-12);
  CHECK(rel_err(s.n_b, o.n_b) < 1e-12);
  CHECK(std::abs(s.c.real()) < 1e-14);
  CHECK(rel_err(s.c.imag(), o.im_c) < 1e-12);
  CHECK(s.flux_residual < 1e-12);
  // accounting identities
  CHECK(rel_err(s.heat_rate, m.omega * m.gamma * (m.n_bar() - s.n_a)) < 1e-12);
  CHECK(rel_err(s.work_rate, s.heat_rate / s.cop) < 1e-12);
  CHECK(rel_err(s.min_work_rate, s.heat_rate * (m.temp / s.t_eff - 1.0)) < 1e-12);
  CHECK(rel_err(s.efficiency, s.cop * s.cop_ideal) < 1e-12);
}

TEST_CASE("sideband moments agree with the full master equation at small occupation") {
  SidebandModel m;
  m.omega = 1.0;
  m.aux_omega = 30.0;
  m.g = 0.5;
  m.gamma = 1.0;
  m.gamma_prime = 2.0;
  m.temp = 1.0 / std::log(7.0);  // n_bar = 1/6
  const Index n = 5;
  const OpenSystem sys = sideband_joint_system(m, n);
  const SteadyStateResult ss = steady_state(sys);
  const Matrix num = number_operator(n), id = identity(n);
  const double n_a = (ss.rho * kron(num, id)).trace().real();
  const double n_b = (ss.rho * kron(id, num)).trace().real();
  const Complex c = (ss.rho * kron(creation(n), annihilation(n))).trace();
  const SidebandSteadyState s = sideband_steady_state(m);
  CHECK(rel_err(n_a, s.n_a) < 5e-3);
  CHECK(std::abs(n_b - s.n_b) < 5e-3);
  CHECK(std::abs(c.imag() - s.c.imag()) < 5e-3);
}

TEST_CASE("sideband cooling trends") {
  const SidebandModel base = teufel_model(1.0e5);
  std::vector<double> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(two_pi * (2.0e3 + 16.0e3 * k));
  const auto rows = sideband_efficiency_curve(base, grid);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].t_eff < base.temp);  // colder than the bath for g > 0
    CHECK(rows[i].efficiency > 0.0);
    CHECK(rows[i].efficiency < 1.0);
    CHECK_FALSE(rows[i].second_law_violation);
    if (i > 0) {
      CHECK(rows[i].t_eff < rows[i - 1].t_eff);            // cooling improves with g
      CHECK(rows[i].efficiency > rows[i - 1].efficiency);  // and so does efficiency
    }
  }
}

TEST_CASE("overdamping the auxiliary mode degrades the cooling") {
  // past the impedance-matched point, a lossier auxiliary cools less
  const double g_hz = 2.0e5;
  const SidebandSteadyState matched = sideband_steady_state(teufel_model(1.0e6, g_hz));
  const SidebandSteadyState overdamped = sideband_steady_state(teufel_model(5.0e7, g_hz));
  CHECK(overdamped.n_a > matched.n_a);
  CHECK(overdamped.t_eff > matched.t_eff);
}

TEST_CASE("strong exchange pins the mode at the rate-weighted occupation") {
  SidebandModel m;
  m.omega = 1.0;
  m.aux_omega = 20.0;
  m.gamma = 0.5;
  m.gamma_prime = 4.0;
  m.temp = 1.0 / std::log(1.5);
  m.g = 400.0;  // rate >> gamma, gamma'
  const SidebandSteadyState s = sideband_steady_state(m);
  const double pinned =
      (m.gamma * m.n_bar() + m.gamma_prime * m.n_bar_prime()) / (m.gamma + m.gamma_prime);
  CHECK(rel_err(s.n_a, pinned) < 1e-4);
  CHECK(rel_err(s.n_b, pinned) < 1e-4);
  CHECK_FALSE(s.weak_coupling_ok);
}

TEST_CASE("teufel preset carries the published drum parameters") {
  const SidebandModel m = teufel_model(2.0e5, 1.0e5);
  CHECK(rel_err(m.omega, two_pi * 10.56e6) < 1e-12);
  CHECK(rel_err(m.aux_omega, two_pi * 1.54e9) < 1e-12);
  CHECK(rel_err(m.gamma, two_pi * 32.0) < 1e-12);
  CHECK(rel_err(m.gamma_prime, two_pi * 2.0e5) < 1e-12);
  CHECK(rel_err(m.g, two_pi * 1.0e5) < 1e-12);
  CHECK(rel_err(m.temp, angular_from_kelvin(0.020)) < 1e-12);
  CHECK(m.n_bar() == doctest::Approx(38.96).epsilon(1e-3));
  CHECK(m.n_bar_prime() == doctest::Approx(0.0254).epsilon(1e-2));
}

TEST_CASE("refrigerator identity is exact on the truncated space") {
  const double omega = 1.0, temp = 1.0 / std::log(1.5), gamma = 0.3;
  for (double ratio : {0.15, 0.4, 0.8}) {
    const RefrigeratorCheck rc = refrigerator_identity(omega, temp, gamma, 40, ratio * temp);
    CHECK(rc.ok);
    CHECK(rc.work_rel_err <= 1e-8);
    CHECK(rc.entropy_rel_err <= 1e-8);
    CHECK(rc.heat_rate > 0.0);  // heat flows out of the held cold mode's bath
    CHECK(rc.min_work > 0.0);
  }
}

TEST_CASE("refrigerator identity fields are self-consistent") {
  const RefrigeratorCheck rc = refrigerator_identity(2.0, 1.5, 0.2, 30, 0.6);
  CHECK(rel_err(rc.work_identity, rc.heat_rate * (rc.temp / rc.t_eff - 1.0)) < 1e-12);
  CHECK(rel_err(rc.entropy_identity, rc.heat_rate / rc.t_eff) < 1e-12);
  CHECK(rc.n_bar == doctest::Approx(thermal_occupation(2.0, 1.5)));
  CHECK(rc.tail_mass == doctest::Approx(thermal_tail_mass(2.0, 1.5, 30)));
}

TEST_CASE("sideband consistency helper evaluates at the reached temperature") {
  const SidebandModel m = teufel_model(1.0e5, 8.0e4);
  const RefrigeratorCheck rc = sideband_min_power_consistency(m, true);
  CHECK(rc.ok);
  // scaled variant pins the bath occupation at 2
  CHECK(thermal_occupation(rc.omega, rc.temp) == doctest::Approx(2.0));
  CHECK(rc.t_eff < rc.temp);
}

TEST_CASE("computation error cost formula and scaling") {
  const QcCost cost = qc_free_energy_loss(2.0e-6, 1.0e-6, 1.0, 1.0, 0.5);
  CHECK(cost.p_beta == doctest::Approx(1.0e-6));
  CHECK(cost.p_gamma == doctest::Approx(1.0e-6));
  const double expected =
      1.0e-6 * 1.0 - 0.5 * (1.0e-6 * std::log(1.0e-6) + 1.0e-6 * std::log(1.0e-6));
  CHECK(rel_err(cost.work, expected) < 1e-12);
  CHECK_FALSE(cost.range_warning);
  // total cost is exactly linear in the slot count
  CHECK(rel_err(qc_computation_cost(cost.work, 1000000), 1.0e6 * cost.work) < 1e-15);
  CHECK(qc_computation_cost(cost.work, 0) == 0.0);
  CHECK_THROWS_AS((void)qc_computation_cost(cost.work, -3), std::invalid_argument);
}

TEST_CASE("computation error cost warns outside the leak-probability range") {
  CHECK(qc_free_energy_loss(0.2, 0.1, 1.0, 1.0, 0.5).range_warning);
  CHECK_FALSE(qc_free_energy_loss(1e-4, 1e-4, 1.0, 1.0, 0.5).range_warning);
}

TEST_CASE("monte carlo estimate brackets the formula at small leak rates") {
  const double gamma = 2.0e-3, beta = 1.0e-3, tau = 1.0, e = 1.0, temp = 0.5;
  const QcCost formula = qc_free_energy_loss(gamma, beta, tau, e, temp);
  const QcCost mc = qc_free_energy_loss(gamma, beta, tau, e, temp, QcMode::monte_carlo, 2000, 5);
  CHECK(mc.samples == 2000);
  CHECK(mc.std_error > 0.0);
  CHECK(rel_err(mc.work, formula.work) < 0.25);
  // deterministic for a fixed seed
  const QcCost again = qc_free_energy_loss(gamma, beta, tau, e, temp, QcMode::monte_carlo, 2000, 5);
  CHECK(mc.work == again.work);
  CHECK(mc.std_error == again.std_error);
}

TEST_CASE("model validation rejects bad sideband parameters") {
  SidebandModel m;
  m.omega = 1.0;
  m.aux_omega = 0.5;  // auxiliary below the mechanical frequency
  m.g = 0.1;
  m.gamma = 0.1;
  m.gamma_prime = 0.1;
  m.temp = 1.0;
  CHECK_THROWS_AS(validate(m), std::invalid_argument);
  m.aux_omega = 10.0;
  m.gamma = -0.1;
  CHECK_THROWS_AS(validate(m), std::invalid_argument);
}
