// guided_wave.hpp — two counter-propagating coupled modes
//
//     dA/dz = k(z) e^{−iΔz} B,   dB/dz = k*(z) e^{iΔz} A,
//
// solved by mapping onto the su(1,1) problem in z. After the tilde transform
// Ã = A e^{iΔz/2}, B̃ = B e^{−iΔz/2} and a swap of the mode labels, the
// generator takes the canonical form with Ω = Δ/2, |ω| = |k| and
// φ_ω = −φ_k − π/2, under which the solvable class is exactly
// 2ν|k(z)| + φ̇_k(z) = Δ with constant ν ≥ 0.

#pragma once

#include <optional>
#include <vector>

#include "su11/hamiltonian.hpp"
#include "su11/linalg.hpp"
#include "su11/ode_oracle.hpp"

namespace su11 {

struct CoupledModeProblem {
    double delta = 0.0;       // phase mismatch, inverse length
    CoefficientFn k_abs;      // |k(z)| ≥ 0
    CoefficientFn phi_k;      // φ_k(z)
    Complex a0{1.0, 0.0};     // A(0)
    Complex b0{0.0, 0.0};     // B(0)
};

// canonical su(1,1) generator of the swapped-basis state (B̃, Ã)
Su11Hamiltonian to_su11(const CoupledModeProblem& p);

// Fits a constant ν ≥ 0 to (Δ − φ̇_k)/(2|k|) on a grid over [0, z_max] and
// accepts when the residual of 2ν|k| + φ̇_k = Δ stays within tol everywhere.
// Empty when no such ν exists or when φ_k has no exact in-family derivative
// (tables), in which case propagation falls back to direct integration.
std::optional<SolvableScenario> detect_solvable(const CoupledModeProblem& p, double z_max,
                                                double tol = 1e-10, int grid_points = 257);

struct ModeAmplitudes {
    Complex A, B;
};

// |A|² − |B|², conserved along z
double mode_flux(const ModeAmplitudes& m);

ModeAmplitudes propagate_modes(const CoupledModeProblem& p, double z);
ModeAmplitudes propagate_modes(const CoupledModeProblem& p, double z,
                               const IntegratorConfig& cfg);

// increasing grid; closed form when the solvability detector fires, one
// continuous direct integration otherwise
std::vector<ModeAmplitudes> propagate_modes_grid(const CoupledModeProblem& p,
                                                 const std::vector<double>& zs);
std::vector<ModeAmplitudes> propagate_modes_grid(const CoupledModeProblem& p,
                                                 const std::vector<double>& zs,
                                                 const IntegratorConfig& cfg);

} // namespace su11
