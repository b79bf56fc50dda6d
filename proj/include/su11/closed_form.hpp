// closed_form.hpp — exact ν-regime solutions of the Riccati problem
//
//     Ẏ = −|ω| Y² − 2iν|ω| Y + |ω|,   Y(0) = 0,
//
// the phase/amplitude integrals r, s, y and the assembled non-unitary
// evolution operator in Caley–Klein form
//
//     U = [[a, b], [b*, a*]],   |a|² − |b|² = 1.
//
// Everything is driven by the accumulated phase χ(t) = ∫_0^t |ω|; the same
// χ feeds Y and all integrals so the two stay consistent.

#pragma once

#include <string>
#include <vector>

#include "su11/hamiltonian.hpp"
#include "su11/linalg.hpp"

namespace su11 {

enum class Regime { trigonometric, hyperbolic, rational, zero };

std::string to_string(Regime r);

// |ν−1| ≤ 1e-6 dispatches to the rational forms: sqrt(ν²−1) cancels
// catastrophically there and the ν=1 limit is the correct continuation.
Regime classify_regime(double nu);

// --------------------------- χ-space primitives -----------------------------

// Y_ν as a function of χ. The trigonometric branch is evaluated in the
// cos²-multiplied form [√(ν²−1) sin·cos − iν sin²] / [ν² − cos²], which is
// finite at √(ν²−1)χ = π/2 + kπ where tan/sec blow up.
Complex regime_Y(double nu, double chi);

double regime_abs_Y_sq(double nu, double chi);

// 1 − |Y|² without cancellation (needed for the determinant identity
// exp(2r)(1−|Y|²) = 1 when |Y| → 1)
double regime_one_minus_abs_Y_sq(double nu, double chi);

// φ_ν(χ), branch-continuous: the arctan is unwrapped by counting crossings
// of √(ν²−1)χ through π/2 + kπ, not by comparing successive samples.
double regime_phase(double nu, double chi);

// P(χ) = |Y|² / (1 + |Y|²), always < 1 and ≤ 1/2 on the solvable family
double transition_probability_chi(double nu, double chi);

// ------------------------------ operator data -------------------------------

struct Propagator {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    Matrix2 matrix() const {
        Matrix2 u;
        u << a, b, std::conj(b), std::conj(a);
        return u;
    }
    // |a|² − |b|² − 1; cancellation-limited at large |a|, see
    // RegimeSolution::det_identity_residual for the stable route
    double caley_klein_residual() const {
        return std::abs(std::norm(a) - std::norm(b) - 1.0);
    }
};

struct PhaseIntegrals {
    double r = 0.0;      // ∫ |ω| Re Y
    double s = 0.0;      // ∫ Ω + ∫ |ω| Im Y
    double y = 0.0;      // π/2 + 2νχ − 2∫Ω + φ_ν
    double phi_nu = 0.0; // unwrapped φ_ν(χ(t))
};

// ------------------------------ RegimeSolution -------------------------------

class RegimeSolution {
public:
    explicit RegimeSolution(SolvableScenario scenario);

    const SolvableScenario& scenario() const { return scenario_; }
    double nu() const { return scenario_.nu(); }
    Regime regime() const { return regime_; }

    // χ(t) = ∫_0^t |ω|, by adaptive quadrature (abs tol 1e-12)
    double chi(double t) const;

    Complex Y(double t) const;
    double one_minus_abs_Y_sq(double t) const;

    PhaseIntegrals phase_integrals(double t) const;

    // a = e^r e^{−is};  b = i e^{iφ_ω(t)} Y e^{r+is}, i.e. |b| = |Y| e^r with
    // the phase taken from the complex Y itself (equal to s + y + φ_ω(0)
    // modulo 2π wherever Y has not yet crossed zero)
    Propagator propagator(double t) const;

    // |exp(2r)(1−|Y|²) − 1| evaluated without cancellation
    double det_identity_residual(double t) const;

    double transition_probability(double t) const;

    // (Ω + φ̇_ω/2) σz − i|ω| σy  =  |ω| (ν σz − i σy) on this family
    Matrix2 effective_hamiltonian(double t) const;

    // segment-accumulated sweep over an increasing time grid; much cheaper
    // than independent phase_integrals calls for dense output
    struct SweepPoint {
        double t = 0.0;
        double chi = 0.0;
        PhaseIntegrals phase;
        Propagator u;
    };
    std::vector<SweepPoint> sweep(const std::vector<double>& ts) const;

private:
    Propagator assemble(double t, double chi_t, const PhaseIntegrals& ph) const;

    SolvableScenario scenario_;
    Regime regime_;
    double quad_tol_ = 1e-12;
    double inner_quad_tol_ = 1e-13;
    int quad_cap_ = 10000;
};

} // namespace su11
