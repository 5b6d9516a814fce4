// model_io.hpp: JSON model files.
//
// Schema (all keys required unless marked optional, unknown keys rejected):
//   dim: integer >= 1
//   hamiltonian: {"real": [[...]], "imag": [[...]] optional}
//   reference_temperature: number > 0
//   dissipators: array of
//     {"label": str, "type": "thermal_qubit",      "params": {e, temp, gamma}}
//     {"label": str, "type": "thermal_oscillator", "params": {omega, temp, gamma, n_trunc}}
//     {"label": str, "type": "depolarizing",       "params": {beta}}
//     {"label": str, "type": "custom", "jumps": [{"op": matrix, "rate": number}, ...],
//      "invariant_state": matrix optional, "bath_temperature": number optional}
//   target_state: matrix or {"gibbs": T_c}, optional
// All rates and frequencies are angular (rad/s); temperatures are in the same
// units (k_B = hbar = 1). Parse failures carry the path to the offending key.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcc/lindblad.hpp"

namespace qcc {

struct DissipatorSpec {
  std::string label;
  std::string type;  // thermal_qubit | thermal_oscillator | depolarizing | custom
  std::map<std::string, double> params;  // builder types
  std::vector<Jump> jumps;               // custom
  std::optional<Matrix> invariant_state;
  std::optional<double> bath_temperature;
};

struct TargetSpec {
  std::optional<Matrix> explicit_state;
  std::optional<double> gibbs_temp;
};

struct ModelSpec {
  Index dim = 0;
  Matrix hamiltonian;
  double reference_temperature = 0.0;
  std::vector<DissipatorSpec> dissipators;
  std::optional<TargetSpec> target;
};

ModelSpec parse_model(const std::string& json_text);
ModelSpec load_model(const std::string& path);
std::string model_to_json(const ModelSpec& spec);

// Instantiates the dissipators and validates the assembled system.
OpenSystem build_system(const ModelSpec& spec);

// Explicit target, or the Gibbs state of the model Hamiltonian when the file
// says {"gibbs": T_c}. Empty when the file has no target.
std::optional<Matrix> resolve_target(const ModelSpec& spec);

}  // namespace qcc
