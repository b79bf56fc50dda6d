// json_io.hpp — JSON (de)serialization for scenario, Hamiltonian, density
// and coupled-mode problem files. Field names are part of the file format:
//   coefficient   {"family": "constant|sinusoid|polynomial", "params": [...]}
//                 {"family": "table", "t": [...], "v": [...]}
//   scenario      {"nu", "omega_abs", "phase_rate", "phi0"}
//   hamiltonian   {"big_omega", "omega_abs", "phi_omega"}
//   rho0          [[re,im],[re,im],[re,im],[re,im]]      (row-major)
//   guided wave   {"delta", "k_abs", "phi_k", "A0": [re,im], "B0": [re,im]}

#pragma once

#include <string>

#include <json.hpp>

#include "su11/guided_wave.hpp"
#include "su11/hamiltonian.hpp"
#include "su11/open_dynamics.hpp"

namespace su11 {

nlohmann::json to_json(const CoefficientFn& f);
nlohmann::json to_json(const SolvableScenario& s);
nlohmann::json to_json(const Su11Hamiltonian& h);
nlohmann::json to_json(const CoupledModeProblem& p);

// `where` prefixes every diagnostic, e.g. "scenario.omega_abs"
CoefficientFn coefficient_from_json(const nlohmann::json& j, const std::string& where);
SolvableScenario scenario_from_json(const nlohmann::json& j);
Su11Hamiltonian hamiltonian_from_json(const nlohmann::json& j);
DensityMatrix density_from_json(const nlohmann::json& j);
CoupledModeProblem coupled_mode_problem_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

} // namespace su11
