// cli.hpp — command implementations behind the `su11` executable. Kept out
// of main() so the commands can be driven directly from tests.

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace su11 {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
    std::string scenario_path;
    std::string problem_path;
    std::string rho0_path;
    std::string out_path;
    double t_max = 0.0; // doubles as z_max for guided-wave
    int samples = 1000;
    std::vector<double> nu_grid;
    std::optional<double> tol_override; // oracle tolerance for verify
};

// all return a process exit code; diagnostics go to `diag`
int run_rabi_curve(const RunConfig& cfg, std::ostream& diag);
int run_propagator(const RunConfig& cfg, std::ostream& diag);
int run_guided_wave(const RunConfig& cfg, std::ostream& diag);
int run_open_evolve(const RunConfig& cfg, std::ostream& diag);
int run_verify_command(const RunConfig& cfg, std::ostream& diag);

} // namespace su11
