// hamiltonian.hpp — su(1,1) Hamiltonian data model and algebraic predicates:
// pseudo-Hermiticity, spectrum and exceptional points, quasi-Hermiticity
// metric, closed-system test, and the exactly solvable scenario family.
//
// The canonical matrix is
//     H(t) = [[ Ω(t), −ω(t) ], [ ω*(t), −Ω(t) ]],   ω = |ω| e^{iφ_ω},
// with real Ω. A solvable scenario is the subfamily obeying
//     2 Ω(t) + φ̇_ω(t) = 2 ν |ω(t)|
// for a constant ν ≥ 0; the scenario stores (ν, |ω|, c = φ̇_ω, φ_ω(0)) and
// derives Ω, so the constraint holds by construction.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "su11/coefficient.hpp"
#include "su11/linalg.hpp"

namespace su11 {

// coefficient evaluation failed (domain violation, negative magnitude, ...)
struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& msg) : std::runtime_error(msg) {}
};

// η₊ undefined where Ω(t) = 0
struct SingularMetricError : std::runtime_error {
    explicit SingularMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

class Su11Hamiltonian {
public:
    Su11Hamiltonian(CoefficientFn big_omega, CoefficientFn omega_abs, CoefficientFn phi_omega);

    double big_omega(double t) const;
    double omega_abs(double t) const; // throws EvaluationError if it evaluates < 0
    double phi_omega(double t) const;
    Complex omega(double t) const;
    Matrix2 matrix(double t) const;

    const CoefficientFn& big_omega_fn() const { return big_omega_; }
    const CoefficientFn& omega_abs_fn() const { return omega_abs_; }
    const CoefficientFn& phi_omega_fn() const { return phi_omega_; }

private:
    CoefficientFn big_omega_;
    CoefficientFn omega_abs_;
    CoefficientFn phi_omega_;
};

class SolvableScenario {
public:
    SolvableScenario(double nu, CoefficientFn omega_abs, CoefficientFn phase_rate,
                     double phi0 = 0.0);

    double nu() const { return nu_; }
    double phi0() const { return phi0_; }

    double omega_abs(double t) const;
    double phase_rate(double t) const;              // c(t) = φ̇_ω(t)
    double big_omega(double t) const;               // ν|ω(t)| − c(t)/2
    double phi_omega(double t) const;               // φ0 + ∫_0^t c
    Complex omega(double t) const;
    Matrix2 matrix(double t) const;

    const CoefficientFn& omega_abs_fn() const { return omega_abs_; }
    const CoefficientFn& phase_rate_fn() const { return phase_rate_; }

    bool has_constant_coefficients() const;

private:
    double nu_;
    CoefficientFn omega_abs_;
    CoefficientFn phase_rate_;
    double phi0_;
};

// Constant Rabi-like scenario specified by (Ω0, c0) instead of |ω0|;
// requires ν > 0 so that |ω0| = (2Ω0 + c0)/(2ν) is defined.
SolvableScenario constant_scenario_from_big_omega(double nu, double big_omega0, double c0,
                                                  double phi0 = 0.0);

// ‖M† − σz M σz‖_max ≤ tol, i.e. pseudo-Hermiticity with metric η = σz
bool is_pseudo_hermitian(const Matrix2& m, double tol);

enum class SpectrumKind { real, degenerate, complex_pair };

std::string to_string(SpectrumKind k);

struct Spectrum {
    Complex e_plus;
    Complex e_minus;
    SpectrumKind kind;
};

// E_± = ±sqrt(Ω² − |ω|²); degenerate exactly at |ω| = |Ω|
Spectrum spectrum(double big_omega, double omega_abs);
Spectrum spectrum(const Su11Hamiltonian& h, double t);
Spectrum spectrum(const SolvableScenario& s, double t);

struct QuasiHermitianMetric {
    Matrix2 eta;            // η₊ = [[1, −ω/Ω], [−ω*/Ω, 1]]
    bool positive_definite; // |ω|² < Ω²
};

QuasiHermitianMetric quasi_hermitian_metric(const Su11Hamiltonian& h, double t);
QuasiHermitianMetric quasi_hermitian_metric(const SolvableScenario& s, double t);

// ν above which the constant scenario family with fixed (Ω0, c0) has a real
// spectrum: ν* = 1 + c0/(2Ω0). Requires constant coefficients and Ω0 > 0.
double reality_threshold(const SolvableScenario& s);

// True iff φ_ω is constant on the grid, Ω/|ω| is constant on the grid and
// |ω|² < Ω² there, i.e. the quasi-Hermiticity metric is time independent and
// positive. Vanishing |ω| at isolated grid points makes the ratio undefined
// and yields false unless |ω| ≡ 0 on the whole grid.
bool is_closed_system(const Su11Hamiltonian& h, const std::vector<double>& grid);

} // namespace su11
