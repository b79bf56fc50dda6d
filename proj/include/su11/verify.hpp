// verify.hpp — cross-checks of the closed forms against the ODE oracle over
// a grid of ν values; the backing suite of the `verify` CLI command.

#pragma once

#include <string>
#include <vector>

namespace su11 {

struct VerifyCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    std::vector<double> nu_grid{0.0, 0.5, 1.0, 1.01, 1.2, 2.0, 5.0};
    double t_max = 10.0;
    int time_samples = 21;
    bool include_time_dependent = true;

    double tol_oracle = 1e-8;   // ‖U_closed − U_oracle‖_max
    double tol_det = 1e-10;     // determinant identity, stable evaluation
    double tol_id1 = 1e-9;      // |exp(2r)(1−|Y|²) − 1|
    double tol_riccati = 1e-6;  // finite-difference residual of the Y equation
    double tol_u1 = 1e-7;       // u1 vs i e^{iφ_ω} Y
};

VerifyReport run_verify(const VerifyOptions& opts);

} // namespace su11
