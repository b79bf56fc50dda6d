#include "su11/json_io.hpp"

#include <fstream>

namespace su11 {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& where) {
    if (!j.is_number())
        throw std::invalid_argument(where + ": expected a number, got " + j.dump());
    return j.get<double>();
}

double require_member_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
    return require_number(j.at(key), where + "." + key);
}

std::vector<double> require_number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Complex complex_from_pair(const json& j, const std::string& where) {
    const auto v = require_number_array(j, where);
    if (v.size() != 2)
        throw std::invalid_argument(where + ": expected [re, im], got " +
                                    std::to_string(v.size()) + " entries");
    return {v[0], v[1]};
}

const json& require_member(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
    return j.at(key);
}

} // namespace

json to_json(const CoefficientFn& f) {
    json j;
    j["family"] = to_string(f.family());
    if (f.family() == CoeffFamily::table) {
        j["t"] = f.grid();
        j["v"] = f.values();
    } else {
        j["params"] = f.params();
    }
    return j;
}

json to_json(const SolvableScenario& s) {
    json j;
    j["nu"] = s.nu();
    j["omega_abs"] = to_json(s.omega_abs_fn());
    j["phase_rate"] = to_json(s.phase_rate_fn());
    j["phi0"] = s.phi0();
    return j;
}

json to_json(const Su11Hamiltonian& h) {
    json j;
    j["big_omega"] = to_json(h.big_omega_fn());
    j["omega_abs"] = to_json(h.omega_abs_fn());
    j["phi_omega"] = to_json(h.phi_omega_fn());
    return j;
}

json to_json(const CoupledModeProblem& p) {
    json j;
    j["delta"] = p.delta;
    j["k_abs"] = to_json(p.k_abs);
    j["phi_k"] = to_json(p.phi_k);
    j["A0"] = {p.a0.real(), p.a0.imag()};
    j["B0"] = {p.b0.real(), p.b0.imag()};
    return j;
}

CoefficientFn coefficient_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
    const json& fam = require_member(j, "family", where);
    if (!fam.is_string()) throw std::invalid_argument(where + ".family: expected a string");
    const std::string family = fam.get<std::string>();

    if (family == "table") {
        auto grid = require_number_array(require_member(j, "t", where), where + ".t");
        auto values = require_number_array(require_member(j, "v", where), where + ".v");
        try {
            return CoefficientFn::table(std::move(grid), std::move(values));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }

    const auto params = require_number_array(require_member(j, "params", where),
                                             where + ".params");
    if (family == "constant") {
        if (params.size() != 1)
            throw std::invalid_argument(where + ".params: constant takes [value]");
        return CoefficientFn::constant(params[0]);
    }
    if (family == "sinusoid") {
        if (params.size() != 4)
            throw std::invalid_argument(
                where + ".params: sinusoid takes [offset, amplitude, angular_freq, phase]");
        return CoefficientFn::sinusoid(params[0], params[1], params[2], params[3]);
    }
    if (family == "polynomial") {
        if (params.empty())
            throw std::invalid_argument(where + ".params: polynomial needs coefficients");
        return CoefficientFn::polynomial(params);
    }
    throw std::invalid_argument(where + ".family: unknown '" + family +
                                "' (expected constant|sinusoid|polynomial|table)");
}

SolvableScenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("scenario: expected an object");
    const double nu = require_member_number(j, "nu", "scenario");
    if (!(nu >= 0.0)) throw std::invalid_argument("scenario.nu: must be >= 0");
    auto omega_abs = coefficient_from_json(require_member(j, "omega_abs", "scenario"),
                                           "scenario.omega_abs");
    auto phase_rate = coefficient_from_json(require_member(j, "phase_rate", "scenario"),
                                            "scenario.phase_rate");
    const double phi0 = j.contains("phi0") ? require_number(j.at("phi0"), "scenario.phi0") : 0.0;
    return SolvableScenario(nu, std::move(omega_abs), std::move(phase_rate), phi0);
}

Su11Hamiltonian hamiltonian_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("hamiltonian: expected an object");
    auto big_omega = coefficient_from_json(require_member(j, "big_omega", "hamiltonian"),
                                           "hamiltonian.big_omega");
    auto omega_abs = coefficient_from_json(require_member(j, "omega_abs", "hamiltonian"),
                                           "hamiltonian.omega_abs");
    auto phi_omega = coefficient_from_json(require_member(j, "phi_omega", "hamiltonian"),
                                           "hamiltonian.phi_omega");
    return Su11Hamiltonian(std::move(big_omega), std::move(omega_abs), std::move(phi_omega));
}

DensityMatrix density_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("rho0: expected [[re,im],[re,im],[re,im],[re,im]]");
    Matrix2 rho;
    for (int idx = 0; idx < 4; ++idx) {
        const Complex c = complex_from_pair(j[static_cast<std::size_t>(idx)],
                                            "rho0[" + std::to_string(idx) + "]");
        rho(idx / 2, idx % 2) = c;
    }
    return DensityMatrix::validated(rho);
}

CoupledModeProblem coupled_mode_problem_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("problem: expected an object");
    CoupledModeProblem p{0.0, CoefficientFn::constant(0.0), CoefficientFn::constant(0.0),
                         {1.0, 0.0}, {0.0, 0.0}};
    p.delta = require_member_number(j, "delta", "problem");
    p.k_abs = coefficient_from_json(require_member(j, "k_abs", "problem"), "problem.k_abs");
    p.phi_k = coefficient_from_json(require_member(j, "phi_k", "problem"), "problem.phi_k");
    p.a0 = complex_from_pair(require_member(j, "A0", "problem"), "problem.A0");
    p.b0 = complex_from_pair(require_member(j, "B0", "problem"), "problem.B0");
    return p;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("'" + path + "': " + e.what());
    }
    return j;
}

} // namespace su11
