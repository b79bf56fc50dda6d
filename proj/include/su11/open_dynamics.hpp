// open_dynamics.hpp — trace- and positivity-preserving nonlinear evolution of
// density matrices under a non-Hermitian Hamiltonian:
//
//     ρ(t) = U ρ0 U† / Tr(U ρ0 U†),
//
// equivalently ρ̇ = −i[H0, ρ] − {Γ, ρ} + 2 ρ Tr(ρΓ) with H = H0 − iΓ.
// The conjugation form is the primary path; the nonlinear right-hand side
// exists for cross-checks.

#pragma once

#include "su11/closed_form.hpp"
#include "su11/hamiltonian.hpp"
#include "su11/linalg.hpp"
#include "su11/ode_oracle.hpp"

namespace su11 {

class DensityMatrix {
public:
    // Hermitian within tol_hermitian, unit trace within tol_trace and
    // eigenvalues above eig_floor; throws std::invalid_argument with the
    // violated bound otherwise.
    static DensityMatrix validated(const Matrix2& rho, double tol_hermitian = 1e-12,
                                   double tol_trace = 1e-12, double eig_floor = -1e-12);

    static DensityMatrix pure(const Vector2& psi);
    // |+><+| in the σz eigenbasis
    static DensityMatrix plus_state();
    static DensityMatrix maximally_mixed();

    const Matrix2& matrix() const { return rho_; }
    Complex entry(int r, int c) const { return rho_(r, c); }

    double trace_error() const;
    double purity() const; // Tr ρ²
    double min_eigenvalue() const;

private:
    explicit DensityMatrix(Matrix2 rho) : rho_(std::move(rho)) {}
    Matrix2 rho_;
};

struct HermitianSplit {
    Matrix2 h0;    // (H + H†)/2
    Matrix2 gamma; // i (H − H†)/2, so that H = H0 − iΓ
};

HermitianSplit hermitian_split(const Matrix2& h);

// −i[H0, ρ] − {Γ, ρ} + 2 ρ Tr(ρΓ); traceless for unit-trace ρ
Matrix2 nonlinear_rhs(const Matrix2& h, const Matrix2& rho);

// U ρ U† / Tr(U ρ U†), re-symmetrized to curb Hermiticity drift
DensityMatrix normalized_conjugation(const Matrix2& u, const DensityMatrix& rho0);

DensityMatrix evolve_density(const RegimeSolution& solution, const DensityMatrix& rho0, double t);
DensityMatrix evolve_density(const Su11Hamiltonian& h, const DensityMatrix& rho0, double t,
                             const IntegratorConfig& cfg);

// ‖φ̂_s(φ̂_t(ρ0)) − φ̂_{s+t}(ρ0)‖_max for constant H, via exp(−iHt)
double semigroup_deviation(const Matrix2& h_const, const DensityMatrix& rho0, double s, double t);

} // namespace su11
