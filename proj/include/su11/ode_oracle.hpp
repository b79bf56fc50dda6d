// ode_oracle.hpp — direct numerical integration of the defining equations,
// used as ground truth for every closed form. Complex systems are integrated
// as doubled real systems to keep the stepper generic.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "su11/hamiltonian.hpp"
#include "su11/linalg.hpp"

namespace su11 {

struct IntegratorConfig {
    enum class Method { rk4_fixed, rk45_adaptive };

    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 1e-2;
    Method method = Method::rk45_adaptive;
};

struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& msg, double reached)
        : std::runtime_error(msg), t_reached(reached) {}
    double t_reached;
};

struct RiccatiBlowupError : std::runtime_error {
    RiccatiBlowupError(const std::string& msg, double escape)
        : std::runtime_error(msg), t_escape(escape) {}
    double t_escape;
};

// dy/dt = rhs(t, y); fixed dimension given by y0.size()
using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

std::vector<double> integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                                  const IntegratorConfig& cfg);

// 0.01 / max coefficient magnitude over [0, t_end]
double default_max_step(const Su11Hamiltonian& h, double t_end);
double default_max_step(const SolvableScenario& s, double t_end);

// Solves i U̇ = H(t) U, U(0) = 1. H is traceless so det U = 1 is preserved;
// the returned matrix is generally non-unitary.
Matrix2 integrate_U(const std::function<Matrix2(double)>& hamiltonian, double t,
                    const IntegratorConfig& cfg);

// one continuous integration, recorded at each point of the increasing grid
std::vector<Matrix2> integrate_U_grid(const std::function<Matrix2(double)>& hamiltonian,
                                      const std::vector<double>& ts,
                                      const IntegratorConfig& cfg);

// Gauss-decomposition parameters: u̇1 = iω − 2iΩ u1 + iω* u1² (Riccati),
// u̇2 = iΩ − iω* u1, u̇3 = −iω* e^{−u2}, all starting from 0.
struct RiccatiState {
    Complex u1, u2, u3;

    // [[e^{−u2} + u1 e^{u2} u3, u1 e^{u2}], [e^{u2} u3, e^{u2}]]
    Matrix2 reconstruct_U() const;
};

// Integrates the u-system and cross-checks the reconstructed operator
// against integrate_U; an inconsistency beyond 1e-7 (relative to the
// operator scale) throws. |u1| > 1e6 aborts with RiccatiBlowupError.
RiccatiState integrate_riccati(const Su11Hamiltonian& h, double t, const IntegratorConfig& cfg);
RiccatiState integrate_riccati(const SolvableScenario& s, double t, const IntegratorConfig& cfg);

} // namespace su11
