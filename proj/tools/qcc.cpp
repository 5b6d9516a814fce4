// qcc.cpp: command-line surface.
//
// Exit codes: 0 ok, 2 input error, 3 numerical failure, 4 divergent result
// requested as a plain scalar.
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qcc/model_io.hpp"
#include "qcc/models.hpp"
#include "qcc/operators.hpp"
#include "qcc/strong.hpp"
#include "qcc/thermo.hpp"
#include "qcc/units.hpp"
#include "qcc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitDivergent = 4;

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string sci(qcc::Complex v) { return sci(v.real()) + (v.imag() < 0.0 ? " - " : " + ") +
                                         sci(std::abs(v.imag())) + "i"; }

std::string join_args(int argc, char** argv) {
  std::string cmd = "qcc";
  for (int i = 1; i < argc; ++i) cmd += std::string(" ") + argv[i];
  return cmd;
}

// Inputs are Hz and kelvin unless --natural puts everything in rad/s.
struct Units {
  bool natural = false;
  double freq(double v) const { return natural ? v : qcc::angular_from_hz(v); }
  double temp(double v) const { return natural ? v : qcc::angular_from_kelvin(v); }
  const char* describe() const {
    return natural ? "all quantities rad/s (natural, k_B = hbar = 1)"
                   : "frequencies/rates/gaps in Hz (x 2pi), temperatures in K "
                     "(x 1.309e+11 rad/s per K); outputs rad/s";
  }
};

void print_header(std::ostream& os, const std::string& argv_line, const Units* units) {
  os << "# qcc " << qcc::kVersion << "\n";
  os << "# command: " << argv_line << "\n";
  if (units) os << "# units: " << units->describe() << "\n";
}

// ----------- sweep grids -----------

struct Sweep {
  std::string param;
  double start = 0.0, stop = 0.0;
  std::size_t count = 0;
  bool log = false;
};

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 4 || parts.size() > 5)
    throw qcc::ParseError("sweep: expected PARAM:START:STOP:COUNT[:lin|log]");
  Sweep s;
  s.param = parts[0];
  try {
    s.start = std::stod(parts[1]);
    s.stop = std::stod(parts[2]);
    s.count = static_cast<std::size_t>(std::stoul(parts[3]));
  } catch (const std::exception&) {
    throw qcc::ParseError("sweep: bad number in \"" + text + "\"");
  }
  if (parts.size() == 5) {
    if (parts[4] == "log")
      s.log = true;
    else if (parts[4] != "lin")
      throw qcc::ParseError("sweep: scale must be lin or log");
  }
  if (s.count < 2) throw qcc::ParseError("sweep: count must be >= 2");
  if (!(s.stop > s.start)) throw qcc::ParseError("sweep: stop must exceed start");
  if (s.log && s.start <= 0.0) throw qcc::ParseError("sweep: log scale needs start > 0");
  return s;
}

std::vector<double> sweep_grid(const Sweep& s) {
  std::vector<double> grid(s.count);
  const double n = static_cast<double>(s.count - 1);
  for (std::size_t i = 0; i < s.count; ++i) {
    const double t = static_cast<double>(i) / n;
    grid[i] = s.log ? s.start * std::pow(s.stop / s.start, t)
                    : s.start + (s.stop - s.start) * t;
  }
  return grid;
}

std::size_t sweep_threads(std::size_t points) {
  std::size_t n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("QCC_THREADS")) {
    try {
      n = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw qcc::ParseError("QCC_THREADS is not a count");
    }
  }
  return std::max<std::size_t>(1, std::min(n, points));
}

// ----------- svg polyline charts -----------

struct Series {
  std::string name;
  std::vector<double> xs, ys;
};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_svg(const std::string& path, const std::string& title, bool logx,
               const std::vector<Series>& series) {
  const double width = 720.0, height = 480.0, margin = 60.0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  const auto xval = [&](double x) { return logx ? std::log10(x) : x; };
  for (const Series& s : series)
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(xval(s.xs[i])) || !std::isfinite(s.ys[i])) continue;
      if (first) {
        xmin = xmax = xval(s.xs[i]);
        ymin = ymax = s.ys[i];
        first = false;
      } else {
        xmin = std::min(xmin, xval(s.xs[i]));
        xmax = std::max(xmax, xval(s.xs[i]));
        ymin = std::min(ymin, s.ys[i]);
        ymax = std::max(ymax, s.ys[i]);
      }
    }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const auto px = [&](double x) {
    return margin + (xval(x) - xmin) / (xmax - xmin) * (width - 2.0 * margin);
  };
  const auto py = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * (height - 2.0 * margin);
  };

  std::ofstream out(path);
  if (!out) throw qcc::ParseError("cannot write svg file: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"24\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height - margin + 16
      << "\" font-size=\"10\">" << (logx ? "1e" : "") << svg_num(xmin) << "</text>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 16
      << "\" font-size=\"10\" text-anchor=\"end\">" << (logx ? "1e" : "") << svg_num(xmax)
      << "</text>\n";
  out << "<text x=\"" << margin - 4 << "\" y=\"" << height - margin
      << "\" font-size=\"10\" text-anchor=\"end\">" << svg_num(ymin) << "</text>\n";
  out << "<text x=\"" << margin - 4 << "\" y=\"" << margin
      << "\" font-size=\"10\" text-anchor=\"end\">" << svg_num(ymax) << "</text>\n";

  static const char* colors[] = {"#1f6fb2", "#c04a3b", "#3a8f4d", "#8a5bb8"};
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    out << "<polyline fill=\"none\" stroke=\"" << colors[k % 4] << "\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(xval(s.xs[i])) || !std::isfinite(s.ys[i])) continue;
      out << svg_num(px(s.xs[i])) << "," << svg_num(py(s.ys[i])) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin - 150 << "\" y=\"" << margin + 16.0 * (k + 1)
        << "\" font-size=\"12\" fill=\"" << colors[k % 4] << "\">" << s.name << "</text>\n";
  }
  out << "</svg>\n";
}

// ----------- shared model-file plumbing -----------

struct ModelArgs {
  std::string path;
  std::string target_arg;  // "gibbs:<T_c>" or a path to a matrix-bearing model file
  double temp_override = -1.0;
};

qcc::Matrix resolve_cli_target(const qcc::ModelSpec& spec, const std::string& target_arg) {
  if (!target_arg.empty()) {
    if (target_arg.rfind("gibbs:", 0) == 0) {
      double t_c = 0.0;
      try {
        t_c = std::stod(target_arg.substr(6));
      } catch (const std::exception&) {
        throw qcc::ParseError("--target gibbs:<T_c>: bad number");
      }
      if (t_c <= 0.0) throw qcc::ParseError("--target gibbs:<T_c>: T_c must be > 0");
      return qcc::gibbs_state(spec.hamiltonian, t_c);
    }
    const qcc::ModelSpec other = qcc::load_model(target_arg);
    const auto target = qcc::resolve_target(other);
    if (!target) throw qcc::ParseError("--target file has no target_state");
    return *target;
  }
  const auto target = qcc::resolve_target(spec);
  if (!target)
    throw qcc::ParseError("no target: model file lacks target_state and --target not given");
  return *target;
}

// ----------- subcommands -----------

int run_steady(const std::string& path, const std::string& argv_line) {
  const qcc::ModelSpec spec = qcc::load_model(path);
  const qcc::OpenSystem sys = qcc::build_system(spec);
  const qcc::SteadyStateResult ss = qcc::steady_state(sys);

  print_header(std::cout, argv_line, nullptr);
  std::cout << "# model: " << path << " (dim " << spec.dim << ", " << sys.dissipators.size()
            << (sys.dissipators.size() == 1 ? " dissipator)\n" : " dissipators)\n");
  std::cout << "residual = " << sci(ss.residual) << "\n";
  for (qcc::Index r = 0; r < ss.rho.rows(); ++r)
    for (qcc::Index c = 0; c < ss.rho.cols(); ++c)
      std::cout << "rho[" << r << "][" << c << "] = " << sci(ss.rho(r, c)) << "\n";
  const qcc::HermitianSpectrum spectrum = qcc::hermitian_eig(ss.rho);
  for (qcc::Index i = 0; i < spectrum.values.size(); ++i)
    std::cout << "eigenvalue[" << i << "] = " << sci(spectrum.values(i)) << "\n";
  return kExitOk;
}

int run_cost(const ModelArgs& args, bool csv, bool scalar, const std::string& argv_line) {
  const qcc::ModelSpec spec = qcc::load_model(args.path);
  const qcc::OpenSystem sys = qcc::build_system(spec);
  const qcc::Matrix target = resolve_cli_target(spec, args.target_arg);
  const double temp = args.temp_override > 0.0 ? args.temp_override : spec.reference_temperature;
  const qcc::ControlCostReport report = qcc::min_work_rate(sys, target, temp);

  if (scalar) {
    std::cout << sci(report.min_work_rate) << "\n";
    return report.divergent ? kExitDivergent : kExitOk;
  }
  print_header(std::cout, argv_line, nullptr);
  std::cout << "# model: " << args.path << ", temperature " << sci(temp) << " rad/s\n";
  if (csv) {
    std::cout << "channel,entropy_flow,energy_flow,free_energy_rate,divergent\n";
    for (const qcc::ChannelFlow& ch : report.channels)
      std::cout << ch.label << "," << sci(ch.entropy_flow) << "," << sci(ch.energy_flow)
                << "," << sci(ch.free_energy_rate) << "," << (ch.divergent ? 1 : 0) << "\n";
    std::cout << "total,,," << sci(-report.min_work_rate) << "," << (report.divergent ? 1 : 0)
              << "\n";
  } else {
    for (const qcc::ChannelFlow& ch : report.channels) {
      std::cout << "channel \"" << ch.label << "\": entropy_flow = " << sci(ch.entropy_flow)
                << ", energy_flow = " << sci(ch.energy_flow) << "\n";
      if (ch.divergent) std::cout << "  (divergent: target leaves this channel's support)\n";
    }
    std::cout << "min_work_rate = " << sci(report.min_work_rate) << " rad^2/s^2";
    if (std::isfinite(report.min_work_rate))
      std::cout << " (" << sci(report.min_work_rate * qcc::hbar_si) << " W)";
    std::cout << "\n";
    if (report.divergent)
      std::cout << "divergent: holding this target needs unbounded power\n";
    if (report.support_deficient)
      std::cout << "note: target eigenvalues were clamped at the support floor\n";
  }
  return kExitOk;
}

int run_protocol_check(const ModelArgs& args, std::string dts_text,
                       const std::string& argv_line) {
  const qcc::ModelSpec spec = qcc::load_model(args.path);
  const qcc::OpenSystem sys = qcc::build_system(spec);
  const qcc::Matrix target = resolve_cli_target(spec, args.target_arg);
  const double temp = args.temp_override > 0.0 ? args.temp_override : spec.reference_temperature;

  std::vector<double> dts;
  if (dts_text.empty()) {
    const double scale = std::max(qcc::spectral_bound(sys), 1e-300);
    for (const double f : {5e-2, 2e-2, 1e-2, 5e-3, 2e-3, 1e-3, 5e-4}) dts.push_back(f / scale);
  } else {
    std::stringstream ss(dts_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        dts.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw qcc::ParseError("--dts: bad number \"" + item + "\"");
      }
    }
  }

  const qcc::ProtocolCheck check = qcc::protocol_step_check(sys, target, temp, dts);
  print_header(std::cout, argv_line, nullptr);
  std::cout << "# one explicit Euler step of length dt; free energy destroyed per unit time\n";
  std::cout << "dt,estimate,error\n";
  for (std::size_t i = 0; i < check.dts.size(); ++i)
    std::cout << sci(check.dts[i]) << "," << sci(check.estimates[i]) << ","
              << sci(check.estimates[i] - check.reference) << "\n";
  std::cout << "reference = " << sci(check.reference) << "\n";
  std::cout << "slope = " << sci(check.slope) << "\n";
  std::cout << "limit = " << sci(check.limit) << "\n";
  return kExitOk;
}

void print_sideband_row(std::ostream& os, const qcc::SidebandSteadyState& row) {
  os << sci(row.g) << "," << sci(row.t_eff) << ","
     << sci(qcc::kelvin_from_angular(row.t_eff)) << "," << sci(row.n_a) << ","
     << sci(row.n_b) << "," << sci(row.heat_rate) << "," << sci(row.work_rate) << ","
     << sci(row.min_work_rate) << "," << sci(row.cop) << "," << sci(row.cop_ideal) << ","
     << sci(row.efficiency) << "," << (row.efficiency_defined ? 1 : 0) << ","
     << (row.second_law_violation ? 1 : 0) << "," << (row.weak_coupling_ok ? 1 : 0) << "\n";
}

int run_sideband(const qcc::SidebandModel& base, const std::string& sweep_text,
                 const std::string& csv_path, const std::string& svg_path, const Units& units,
                 const std::string& argv_line) {
  static const char* kColumns =
      "g,t_eff,t_eff_kelvin,n_a,n_b,heat_rate,work_rate,min_work_rate,cop,cop_ideal,"
      "efficiency,efficiency_defined,second_law_violation,weak_coupling_ok";

  std::vector<qcc::SidebandSteadyState> rows;
  if (sweep_text.empty()) {
    rows.push_back(qcc::sideband_steady_state(base));
  } else {
    const Sweep sweep = parse_sweep(sweep_text);
    if (sweep.param != "g")
      throw qcc::ParseError("sweep: only the coupling g can be swept");
    std::vector<double> grid = sweep_grid(sweep);
    for (double& g : grid) g = units.freq(g);

    rows.resize(grid.size());
    const std::size_t workers = sweep_threads(grid.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= rows.size()) return;
        try {
          qcc::SidebandModel m = base;
          m.g = grid[i];
          rows[i] = qcc::sideband_steady_state(m);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::ostringstream csv;
  print_header(csv, argv_line, &units);
  csv << "# model: omega " << sci(base.omega) << ", aux_omega " << sci(base.aux_omega)
      << ", gamma " << sci(base.gamma) << ", gamma_prime " << sci(base.gamma_prime)
      << ", temp " << sci(base.temp) << " (all rad/s); n_bar " << sci(base.n_bar()) << "\n";
  csv << kColumns << "\n";
  for (const auto& row : rows) print_sideband_row(csv, row);

  if (csv_path.empty() || csv_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(csv_path);
    if (!out) throw qcc::ParseError("cannot write csv file: " + csv_path);
    out << csv.str();
    std::cout << "wrote " << rows.size() << (rows.size() == 1 ? " row to " : " rows to ")
              << csv_path << "\n";
  }

  if (!svg_path.empty()) {
    if (rows.size() < 2) throw qcc::ParseError("--svg needs a sweep");
    Series t_eff{"t_eff / temp", {}, {}}, eff{"efficiency", {}, {}};
    for (const auto& row : rows) {
      t_eff.xs.push_back(row.g);
      t_eff.ys.push_back(row.t_eff / base.temp);
      if (row.efficiency_defined) {
        eff.xs.push_back(row.g);
        eff.ys.push_back(row.efficiency);
      }
    }
    const bool logx = !sweep_text.empty() && parse_sweep(sweep_text).log;
    write_svg(svg_path, "sideband cooling vs coupling g (rad/s)", logx, {t_eff, eff});
    std::cout << "wrote plot to " << svg_path << "\n";
  }
  return kExitOk;
}

int run_qubit_cool(double e, double temp, double t_c, double gamma, bool approx,
                   double strong_eps, double aux_gap, bool scalar,
                   const std::string& argv_line, const Units& units) {
  const double weak = qcc::qubit_cool_power(
      e, temp, t_c, gamma, approx ? qcc::QubitCoolMode::approx : qcc::QubitCoolMode::full);

  double value = weak;
  double strong = 0.0;
  const bool use_strong = strong_eps > 0.0;
  if (use_strong) {
    if (aux_gap <= 0.0) aux_gap = 1e3 * std::max(e + strong_eps, temp);
    strong = qcc::two_qubit_strong(e, aux_gap, strong_eps, temp, t_c, gamma);
    value = strong;
  }

  if (scalar) {
    std::cout << sci(value) << "\n";
    return std::isfinite(value) ? kExitOk : kExitDivergent;
  }
  print_header(std::cout, argv_line, &units);
  std::cout << "# gap " << sci(e) << ", bath " << sci(temp) << ", target " << sci(t_c)
            << ", gamma " << sci(gamma) << " (all rad/s)\n";
  std::cout << "weak_power = " << sci(weak) << " rad^2/s^2";
  if (std::isfinite(weak)) std::cout << " (" << sci(weak * qcc::hbar_si) << " W)";
  std::cout << "\n";
  if (use_strong) {
    std::cout << "strong_power = " << sci(strong) << " rad^2/s^2 (shift " << sci(strong_eps)
              << ", auxiliary gap " << sci(aux_gap) << ")\n";
    if (std::isfinite(weak) && weak > 0.0)
      std::cout << "strong/weak = " << sci(strong / weak) << "\n";
  }
  return kExitOk;
}

int run_qc_cost(double gamma, double beta, double tau, double e, double temp,
                std::int64_t m, std::size_t mc_samples, std::uint64_t seed,
                const std::string& argv_line, const Units& units) {
  const qcc::QcCost formula = qcc::qc_free_energy_loss(gamma, beta, tau, e, temp);
  print_header(std::cout, argv_line, &units);
  std::cout << "# p_beta = " << sci(formula.p_beta) << ", p_gamma = " << sci(formula.p_gamma)
            << "\n";
  if (formula.range_warning)
    std::cout << "# warning: leak probabilities exceed the formula's validity (p < 0.05)\n";
  std::cout << "per_qubit = " << sci(formula.work) << " rad/s ("
            << sci(formula.work * qcc::hbar_si) << " J)\n";
  std::cout << "total = " << sci(qcc::qc_computation_cost(formula.work, m)) << " rad/s ("
            << sci(qcc::qc_computation_cost(formula.work, m) * qcc::hbar_si) << " J)\n";
  if (mc_samples > 0) {
    const qcc::QcCost mc = qcc::qc_free_energy_loss(gamma, beta, tau, e, temp,
                                                    qcc::QcMode::monte_carlo, mc_samples, seed);
    std::cout << "monte_carlo = " << sci(mc.work) << " rad/s (std error "
              << sci(mc.std_error) << ", " << mc.samples << " samples, seed " << seed << ")\n";
    if (formula.work != 0.0)
      std::cout << "monte_carlo/formula = " << sci(mc.work / formula.work) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string argv_line = join_args(argc, argv);

  CLI::App app{"minimum power to hold an open quantum system at a target state"};
  app.require_subcommand(1);

  Units units;

  // steady
  auto* steady = app.add_subcommand("steady", "steady state of a model file");
  ModelArgs steady_args;
  steady->add_option("model", steady_args.path, "JSON model file")->required();

  // cost
  auto* cost = app.add_subcommand("cost", "minimum hold power for a target state");
  ModelArgs cost_args;
  bool cost_csv = false, cost_scalar = false;
  cost->add_option("model", cost_args.path, "JSON model file")->required();
  cost->add_option("--target", cost_args.target_arg,
                   "target override: gibbs:<T_c> or a model file with target_state");
  cost->add_option("--temp", cost_args.temp_override,
                   "reference temperature override (rad/s)");
  cost->add_flag("--csv", cost_csv, "emit channel table as CSV");
  cost->add_flag("--scalar", cost_scalar, "print only the power (exit 4 if divergent)");

  // protocol-check
  auto* proto = app.add_subcommand("protocol-check",
                                   "discrete-step convergence to the minimum power");
  ModelArgs proto_args;
  std::string proto_dts;
  proto->add_option("model", proto_args.path, "JSON model file")->required();
  proto->add_option("--target", proto_args.target_arg, "target override (as in cost)");
  proto->add_option("--temp", proto_args.temp_override, "reference temperature (rad/s)");
  proto->add_option("--dts", proto_dts, "comma-separated step lengths in seconds");

  // sideband
  auto* side = app.add_subcommand("sideband", "resolved-sideband cooling steady state");
  double sb_omega = 0.0, sb_aux = 0.0, sb_g = 0.0, sb_gamma = 0.0, sb_gamma_p = 0.0,
         sb_temp = 0.0, sb_teufel = -1.0;
  std::string sb_sweep, sb_csv, sb_svg;
  side->add_option("--omega", sb_omega, "mechanical frequency");
  side->add_option("--Omega", sb_aux, "auxiliary frequency");
  side->add_option("--g", sb_g, "exchange coupling");
  side->add_option("--gamma", sb_gamma, "mechanical damping");
  side->add_option("--gamma-prime", sb_gamma_p, "auxiliary damping");
  side->add_option("--temp", sb_temp, "bath temperature");
  side->add_option("--teufel", sb_teufel,
                   "microwave drum preset; value is the auxiliary damping in Hz");
  side->add_option("--sweep", sb_sweep, "g:START:STOP:COUNT[:lin|log] sweep of the coupling");
  side->add_option("--csv", sb_csv, "CSV output path (- for stdout)");
  side->add_option("--svg", sb_svg, "plot path (needs --sweep)");
  side->add_flag("--natural", units.natural, "inputs already in rad/s");

  // qubit-cool
  auto* qcool = app.add_subcommand("qubit-cool", "power to hold a qubit cold");
  double qc_e = 0.0, qc_temp = 0.0, qc_tc = 0.0, qc_gamma = 0.0, qc_eps = 0.0,
         qc_aux_gap = -1.0;
  bool qc_approx = false, qc_scalar = false;
  qcool->add_option("--E", qc_e, "qubit gap")->required();
  qcool->add_option("--T", qc_temp, "bath temperature")->required();
  qcool->add_option("--Tc", qc_tc, "target temperature")->required();
  qcool->add_option("--gamma", qc_gamma, "bath coupling rate")->required();
  qcool->add_flag("--approx", qc_approx, "low-T_c approximation instead of the full form");
  qcool->add_option("--strong", qc_eps, "gap shift from strong coupling to an auxiliary qubit");
  qcool->add_option("--aux-gap", qc_aux_gap, "auxiliary qubit gap (default 1000 x scale)");
  qcool->add_flag("--scalar", qc_scalar, "print only the power (exit 4 if divergent)");
  qcool->add_flag("--natural", units.natural, "inputs already in rad/s");

  // qc-cost
  auto* qcost = app.add_subcommand("qc-cost", "restoration cost of quantum-computer errors");
  double qq_gamma = 0.0, qq_beta = 0.0, qq_tau = 0.0, qq_e = 0.0, qq_temp = 0.0;
  std::int64_t qq_m = 1;
  std::size_t qq_mc = 0;
  std::uint64_t qq_seed = 1;
  qcost->add_option("--gamma", qq_gamma, "energy damping rate")->required();
  qcost->add_option("--beta", qq_beta, "depolarizing rate")->required();
  qcost->add_option("--tau", qq_tau, "gate time in seconds")->required();
  qcost->add_option("--E", qq_e, "qubit gap")->required();
  qcost->add_option("--T", qq_temp, "reference temperature")->required();
  qcost->add_option("--M", qq_m, "number of qubit-gate slots");
  qcost->add_option("--monte-carlo", qq_mc, "Haar-average over this many sampled states");
  qcost->add_option("--seed", qq_seed, "Monte Carlo seed");
  qcost->add_flag("--natural", units.natural, "inputs already in rad/s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (steady->parsed()) return run_steady(steady_args.path, argv_line);
    if (cost->parsed()) return run_cost(cost_args, cost_csv, cost_scalar, argv_line);
    if (proto->parsed()) return run_protocol_check(proto_args, proto_dts, argv_line);
    if (side->parsed()) {
      qcc::SidebandModel m;
      if (sb_teufel >= 0.0) {
        if (units.natural) throw qcc::ParseError("--teufel takes Hz; drop --natural");
        m = qcc::teufel_model(sb_teufel, sb_g);
      } else {
        m.omega = units.freq(sb_omega);
        m.aux_omega = units.freq(sb_aux);
        m.g = units.freq(sb_g);
        m.gamma = units.freq(sb_gamma);
        m.gamma_prime = units.freq(sb_gamma_p);
        m.temp = units.temp(sb_temp);
      }
      return run_sideband(m, sb_sweep, sb_csv, sb_svg, units, argv_line);
    }
    if (qcool->parsed())
      return run_qubit_cool(units.freq(qc_e), units.temp(qc_temp), units.temp(qc_tc),
                            units.freq(qc_gamma), qc_approx, units.freq(std::max(qc_eps, 0.0)),
                            qc_aux_gap > 0.0 ? units.freq(qc_aux_gap) : -1.0, qc_scalar,
                            argv_line, units);
    if (qcost->parsed())
      return run_qc_cost(units.freq(qq_gamma), units.freq(qq_beta), qq_tau, units.freq(qq_e),
                         units.temp(qq_temp), qq_m, qq_mc, qq_seed, argv_line, units);
  } catch (const qcc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qcc::NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}
