// test_cli.cpp: end-to-end runs of the command line binary.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcc/models.hpp"
#include "qcc/operators.hpp"
#include "qcc/strong.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Run the binary through the shell, capturing both streams.
RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = "/tmp/qcc_cli_test_" + std::to_string(counter++);
  const std::string cmd =
      env + (env.empty() ? "" : " ") + std::string(QCC_CLI_PATH) + " " + args + " > " + base +
      ".out 2> " + base + ".err";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::string bundled(const std::string& name) { return std::string(QCC_MODELS_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// value after "name = " on its own line
double parse_value(const std::string& out, const std::string& name) {
  const std::string key = name + " = ";
  const std::size_t at = out.find(key);
  REQUIRE(at != std::string::npos);
  return std::strtod(out.c_str() + at + key.size(), nullptr);
}

}  // namespace

TEST_CASE("steady subcommand prints the thermal fixed point") {
  const RunResult r = run("steady " + bundled("thermal_qubit.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "7.310585786300e-01"));
  CHECK(contains(r.out, "residual"));
}

TEST_CASE("steady subcommand reports degenerate kernels on exit code 3") {
  const RunResult r = run("steady " + bundled("degenerate_blocks.json"));
  CHECK(r.code == 3);
  CHECK(contains(r.err, "not unique"));
}

TEST_CASE("cost scalar output matches the library") {
  const RunResult r = run("cost " + bundled("thermal_qubit.json") + " --scalar");
  CHECK(r.code == 0);
  const double w = std::strtod(r.out.c_str(), nullptr);
  const double expected = qcc::qubit_cool_power(1.0, 1.0, 0.25, 0.1);
  CHECK(std::abs(w - expected) <= 1e-10 * expected);
}

TEST_CASE("holding the bath state costs nothing") {
  const RunResult r = run("cost " + bundled("thermal_qubit.json") + " --target gibbs:1.0 --scalar");
  CHECK(r.code == 0);
  CHECK(std::abs(std::strtod(r.out.c_str(), nullptr)) < 1e-11);
}

TEST_CASE("divergent targets exit with code 4") {
  const std::string path = "/tmp/qcc_cli_test_pure.json";
  std::ofstream out(path);
  out << R"({
    "dim": 2,
    "hamiltonian": {"real": [[-0.5, 0.0], [0.0, 0.5]]},
    "reference_temperature": 1.0,
    "dissipators": [
      {"label": "bath", "type": "thermal_qubit",
       "params": {"e": 1.0, "temp": 1.0, "gamma": 0.1}}
    ],
    "target_state": {"real": [[0.0, 0.0], [0.0, 1.0]]}
  })";
  out.close();
  const RunResult r = run("cost " + path + " --scalar");
  CHECK(r.code == 4);
  CHECK(contains(r.out, "inf"));
  std::remove(path.c_str());
}

TEST_CASE("cost without a target is a usage error") {
  const std::string model = bundled("degenerate_blocks.json");  // file has no target
  const RunResult r = run("cost " + model);
  CHECK(r.code == 2);
}

TEST_CASE("malformed model files exit with code 2 and the offending path") {
  const std::string path = "/tmp/qcc_cli_test_bad.json";
  std::ofstream out(path);
  out << R"({"dim": 2, "hamiltonian": {"real": [[0,0],[0,0]]},
             "reference_temperature": 1.0, "dissipators": [], "extr": 7})";
  out.close();
  const RunResult r = run("steady " + path);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "extr"));
  std::remove(path.c_str());
}

TEST_CASE("protocol check reports first-order convergence") {
  const RunResult r = run("protocol-check " + bundled("thermal_qubit.json"));
  CHECK(r.code == 0);
  const double slope = parse_value(r.out, "slope");
  CHECK(slope > 0.85);
  CHECK(slope < 1.15);
}

TEST_CASE("sideband sweep is deterministic and thread-count independent") {
  const std::string args = "sideband --teufel 1e5 --sweep g:1e3:2e5:24:log --csv -";
  const RunResult one = run(args, "QCC_THREADS=1");
  const RunResult two = run(args, "QCC_THREADS=3");
  CHECK(one.code == 0);
  CHECK(two.code == 0);
  CHECK(one.out == two.out);

  // effective temperature decreases monotonically along the sweep
  std::istringstream csv(one.out);
  std::string line;
  std::vector<double> t_eff;
  bool past_header = false;
  while (std::getline(csv, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {  // column header row
      past_header = true;
      CHECK(contains(line, "t_eff"));
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');  // g
    std::getline(row, cell, ',');  // t_eff
    t_eff.push_back(std::strtod(cell.c_str(), nullptr));
  }
  REQUIRE(t_eff.size() == 24);
  for (std::size_t i = 1; i < t_eff.size(); ++i) CHECK(t_eff[i] < t_eff[i - 1]);
}

TEST_CASE("sideband rejects malformed sweeps") {
  CHECK(run("sideband --teufel 1e5 --sweep g:10:1:5").code == 2);       // stop below start
  CHECK(run("sideband --teufel 1e5 --sweep g:0:1e5:9:log").code == 2);  // log needs start > 0
  CHECK(run("sideband --teufel 1e5 --sweep g:1:2:1").code == 2);        // fewer than two points
}

TEST_CASE("qubit-cool matches the library and prints the strong-coupling ratio") {
  const RunResult r =
      run("qubit-cool --E 4 --T 1 --Tc 0.25 --gamma 0.05 --strong 3 --aux-gap 60 --natural");
  CHECK(r.code == 0);
  const double weak = parse_value(r.out, "weak_power");
  const double strong = parse_value(r.out, "strong_power");
  CHECK(std::abs(weak - qcc::qubit_cool_power(4.0, 1.0, 0.25, 0.05)) <= 1e-10 * weak);
  CHECK(std::abs(strong - qcc::two_qubit_strong(4.0, 60.0, 3.0, 1.0, 0.25, 0.05)) <=
        1e-6 * strong);
  CHECK(strong < weak);
}

TEST_CASE("qc-cost runs deterministically under a fixed seed") {
  const std::string args =
      "qc-cost --gamma 2e-6 --beta 1e-6 --tau 1 --E 1 --T 0.5 --M 1000 --monte-carlo 400 --seed 9";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "monte_carlo"));
}

TEST_CASE("unknown flags and subcommands are usage errors") {
  CHECK(run("steady " + bundled("thermal_qubit.json") + " --bogus").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("version and help are printable") {
  const RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.out, "steady"));
  CHECK(contains(help.out, "sideband"));
}
