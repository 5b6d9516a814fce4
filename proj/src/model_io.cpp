// model_io.cpp: strict JSON parsing and round-trip serialization.
#include "qcc/model_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qcc/errors.hpp"
#include "qcc/operators.hpp"

namespace qcc {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path.empty() ? what : path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed,
                 const std::set<std::string>& required) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) fail(path, "unknown key \"" + item.key() + "\"");
  for (const auto& key : required)
    if (!j.contains(key)) fail(path, "missing key \"" + key + "\"");
}

double get_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Index get_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Index>();
}

std::vector<std::vector<double>> get_rows(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array()) fail(rpath, "expected an array");
    rows.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c)
      rows.back().push_back(get_number(row[c], rpath + "[" + std::to_string(c) + "]"));
    if (rows.back().size() != rows.front().size()) fail(rpath, "ragged row");
  }
  return rows;
}

Matrix get_matrix(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with \"real\" (and optional \"imag\")");
  expect_keys(j, path, {"real", "imag"}, {"real"});
  const auto real = get_rows(j["real"], path + ".real");
  const Index rows = static_cast<Index>(real.size());
  const Index cols = static_cast<Index>(real.front().size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = real[r][c];
  if (j.contains("imag")) {
    const auto imag = get_rows(j["imag"], path + ".imag");
    if (static_cast<Index>(imag.size()) != rows ||
        static_cast<Index>(imag.front().size()) != cols)
      fail(path + ".imag", "shape differs from \"real\"");
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) += Complex(0.0, imag[r][c]);
  }
  return m;
}

Matrix get_square_matrix(const Json& j, const std::string& path, Index dim) {
  const Matrix m = get_matrix(j, path);
  if (m.rows() != dim || m.cols() != dim)
    fail(path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  return m;
}

std::map<std::string, double> get_params(const Json& j, const std::string& path,
                                         const std::set<std::string>& names) {
  if (!j.is_object()) fail(path, "expected a parameter object");
  expect_keys(j, path, names, names);
  std::map<std::string, double> params;
  for (const auto& name : names) params[name] = get_number(j[name], path + "." + name);
  return params;
}

DissipatorSpec parse_dissipator(const Json& j, const std::string& path, Index dim) {
  if (!j.is_object()) fail(path, "expected a dissipator object");
  DissipatorSpec d;
  if (!j.contains("type")) fail(path, "missing key \"type\"");
  if (!j["type"].is_string()) fail(path + ".type", "expected a string");
  d.type = j["type"].get<std::string>();
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(path + ".label", "expected a string");
    d.label = j["label"].get<std::string>();
  } else {
    d.label = d.type;
  }

  if (d.type == "thermal_qubit") {
    expect_keys(j, path, {"label", "type", "params"}, {"type", "params"});
    d.params = get_params(j["params"], path + ".params", {"e", "temp", "gamma"});
  } else if (d.type == "thermal_oscillator") {
    expect_keys(j, path, {"label", "type", "params"}, {"type", "params"});
    d.params =
        get_params(j["params"], path + ".params", {"omega", "temp", "gamma", "n_trunc"});
    const double n = d.params["n_trunc"];
    if (n != std::floor(n) || n < 2) fail(path + ".params.n_trunc", "expected an integer >= 2");
  } else if (d.type == "depolarizing") {
    expect_keys(j, path, {"label", "type", "params"}, {"type", "params"});
    d.params = get_params(j["params"], path + ".params", {"beta"});
  } else if (d.type == "custom") {
    expect_keys(j, path, {"label", "type", "jumps", "invariant_state", "bath_temperature"},
                {"type", "jumps"});
    const Json& jumps = j["jumps"];
    if (!jumps.is_array() || jumps.empty())
      fail(path + ".jumps", "expected a non-empty array");
    for (std::size_t k = 0; k < jumps.size(); ++k) {
      const std::string jpath = path + ".jumps[" + std::to_string(k) + "]";
      if (!jumps[k].is_object()) fail(jpath, "expected a jump object");
      expect_keys(jumps[k], jpath, {"op", "rate"}, {"op", "rate"});
      Jump jump;
      jump.op = get_square_matrix(jumps[k]["op"], jpath + ".op", dim);
      jump.rate = get_number(jumps[k]["rate"], jpath + ".rate");
      if (jump.rate < 0.0) fail(jpath + ".rate", "expected a rate >= 0");
      d.jumps.push_back(std::move(jump));
    }
    if (j.contains("invariant_state"))
      d.invariant_state = get_square_matrix(j["invariant_state"], path + ".invariant_state", dim);
    if (j.contains("bath_temperature")) {
      d.bath_temperature = get_number(j["bath_temperature"], path + ".bath_temperature");
      if (*d.bath_temperature <= 0.0) fail(path + ".bath_temperature", "expected > 0");
    }
  } else {
    fail(path + ".type",
         "unknown type \"" + d.type +
             "\" (expected thermal_qubit, thermal_oscillator, depolarizing, or custom)");
  }
  return d;
}

Json matrix_to_json(const Matrix& m) {
  Json real = Json::array(), imag = Json::array();
  bool any_imag = false;
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
      any_imag = any_imag || m(r, c).imag() != 0.0;
    }
    real.push_back(std::move(rr));
    imag.push_back(std::move(ri));
  }
  Json out;
  out["real"] = std::move(real);
  if (any_imag) out["imag"] = std::move(imag);
  return out;
}

}  // namespace

ModelSpec parse_model(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& err) {
    throw ParseError(std::string("model file is not valid JSON: ") + err.what());
  }
  if (!j.is_object()) fail("", "top level must be an object");
  expect_keys(j, "",
              {"dim", "hamiltonian", "reference_temperature", "dissipators", "target_state"},
              {"dim", "hamiltonian", "reference_temperature", "dissipators"});

  ModelSpec spec;
  spec.dim = get_count(j["dim"], "dim");
  if (spec.dim < 1) fail("dim", "expected >= 1");
  spec.hamiltonian = get_square_matrix(j["hamiltonian"], "hamiltonian", spec.dim);
  spec.reference_temperature = get_number(j["reference_temperature"], "reference_temperature");
  if (spec.reference_temperature <= 0.0) fail("reference_temperature", "expected > 0");

  if (!j["dissipators"].is_array() || j["dissipators"].empty())
    fail("dissipators", "expected a non-empty array");
  for (std::size_t i = 0; i < j["dissipators"].size(); ++i)
    spec.dissipators.push_back(parse_dissipator(
        j["dissipators"][i], "dissipators[" + std::to_string(i) + "]", spec.dim));

  if (j.contains("target_state")) {
    const Json& t = j["target_state"];
    TargetSpec target;
    if (t.is_object() && t.contains("gibbs")) {
      expect_keys(t, "target_state", {"gibbs"}, {"gibbs"});
      target.gibbs_temp = get_number(t["gibbs"], "target_state.gibbs");
      if (*target.gibbs_temp <= 0.0) fail("target_state.gibbs", "expected > 0");
    } else {
      target.explicit_state = get_square_matrix(t, "target_state", spec.dim);
    }
    spec.target = std::move(target);
  }
  return spec;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const ModelSpec& spec) {
  Json j;
  j["dim"] = spec.dim;
  j["hamiltonian"] = matrix_to_json(spec.hamiltonian);
  j["reference_temperature"] = spec.reference_temperature;
  j["dissipators"] = Json::array();
  for (const DissipatorSpec& d : spec.dissipators) {
    Json jd;
    jd["label"] = d.label;
    jd["type"] = d.type;
    if (d.type == "custom") {
      jd["jumps"] = Json::array();
      for (const Jump& jump : d.jumps) {
        Json jj;
        jj["op"] = matrix_to_json(jump.op);
        jj["rate"] = jump.rate;
        jd["jumps"].push_back(std::move(jj));
      }
      if (d.invariant_state) jd["invariant_state"] = matrix_to_json(*d.invariant_state);
      if (d.bath_temperature) jd["bath_temperature"] = *d.bath_temperature;
    } else {
      jd["params"] = Json::object();
      for (const auto& [name, value] : d.params) jd["params"][name] = value;
    }
    j["dissipators"].push_back(std::move(jd));
  }
  if (spec.target) {
    if (spec.target->gibbs_temp)
      j["target_state"] = Json{{"gibbs", *spec.target->gibbs_temp}};
    else if (spec.target->explicit_state)
      j["target_state"] = matrix_to_json(*spec.target->explicit_state);
  }
  return j.dump(2) + "\n";
}

OpenSystem build_system(const ModelSpec& spec) {
  OpenSystem sys;
  sys.hamiltonian = spec.hamiltonian;
  for (const DissipatorSpec& d : spec.dissipators) {
    Dissipator built;
    if (d.type == "thermal_qubit") {
      built = thermal_qubit_dissipator(d.params.at("e"), d.params.at("temp"),
                                       d.params.at("gamma"));
    } else if (d.type == "thermal_oscillator") {
      built = thermal_oscillator_dissipator(d.params.at("omega"), d.params.at("temp"),
                                            d.params.at("gamma"),
                                            static_cast<Index>(d.params.at("n_trunc")));
    } else if (d.type == "depolarizing") {
      built = depolarizing_dissipator(d.params.at("beta"));
    } else {
      built.jumps = d.jumps;
      built.invariant_state = d.invariant_state;
      built.bath_temperature = d.bath_temperature;
    }
    built.label = d.label;
    sys.dissipators.push_back(std::move(built));
  }
  validate(sys);
  return sys;
}

std::optional<Matrix> resolve_target(const ModelSpec& spec) {
  if (!spec.target) return std::nullopt;
  if (spec.target->gibbs_temp)
    return gibbs_state(spec.hamiltonian, *spec.target->gibbs_temp);
  return spec.target->explicit_state;
}

}  // namespace qcc
