#include "su11/open_dynamics.hpp"

#include <cmath>
#include <string>

namespace su11 {

namespace {

// eigenvalues of a Hermitian 2x2: tr/2 ± sqrt((tr/2)² − det)
std::pair<double, double> hermitian_eigs(const Matrix2& m) {
    const double half_tr = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::max(0.0, half_tr * half_tr - det);
    const double root = std::sqrt(disc);
    return {half_tr - root, half_tr + root};
}

} // namespace

DensityMatrix DensityMatrix::validated(const Matrix2& rho, double tol_hermitian,
                                       double tol_trace, double eig_floor) {
    const double herm_dev = max_abs_diff(rho, rho.adjoint());
    if (herm_dev > tol_hermitian)
        throw std::invalid_argument("density matrix: not Hermitian, ‖ρ − ρ†‖_max = " +
                                    std::to_string(herm_dev) + " > " +
                                    std::to_string(tol_hermitian));
    const Complex tr = rho(0, 0) + rho(1, 1);
    if (std::abs(tr - Complex(1.0, 0.0)) > tol_trace)
        throw std::invalid_argument("density matrix: trace " + std::to_string(tr.real()) +
                                    (tr.imag() >= 0 ? "+" : "") + std::to_string(tr.imag()) +
                                    "i differs from 1 beyond " + std::to_string(tol_trace));
    const Matrix2 sym = 0.5 * (rho + rho.adjoint());
    const auto [lo, hi] = hermitian_eigs(sym);
    (void)hi;
    if (lo < eig_floor)
        throw std::invalid_argument("density matrix: negative eigenvalue " + std::to_string(lo) +
                                    " below floor " + std::to_string(eig_floor));
    return DensityMatrix(sym);
}

DensityMatrix DensityMatrix::pure(const Vector2& psi) {
    const double n2 = std::norm(psi(0)) + std::norm(psi(1));
    if (!(n2 > 0.0)) throw std::invalid_argument("pure state: zero vector");
    Matrix2 rho = (psi * psi.adjoint()) / n2;
    return DensityMatrix(0.5 * (rho + Matrix2(rho.adjoint())));
}

DensityMatrix DensityMatrix::plus_state() {
    Vector2 psi;
    psi << Complex(1.0, 0.0), Complex(0.0, 0.0);
    return pure(psi);
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(0.5 * Matrix2::Identity());
}

double DensityMatrix::trace_error() const {
    return std::abs(rho_(0, 0) + rho_(1, 1) - Complex(1.0, 0.0));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return hermitian_eigs(rho_).first; }

HermitianSplit hermitian_split(const Matrix2& h) {
    HermitianSplit s;
    s.h0 = 0.5 * (h + Matrix2(h.adjoint()));
    s.gamma = Complex(0.0, 0.5) * (h - Matrix2(h.adjoint()));
    return s;
}

Matrix2 nonlinear_rhs(const Matrix2& h, const Matrix2& rho) {
    const auto [h0, gamma] = hermitian_split(h);
    const Matrix2 comm = h0 * rho - rho * h0;
    const Matrix2 anti = gamma * rho + rho * gamma;
    const Complex tr_gr = (rho * gamma).trace();
    return Complex(0.0, -1.0) * comm - anti + 2.0 * tr_gr * rho;
}

DensityMatrix normalized_conjugation(const Matrix2& u, const DensityMatrix& rho0) {
    Matrix2 conj = u * rho0.matrix() * u.adjoint();
    const double tr = conj.trace().real();
    if (!(tr > 1e-300))
        throw std::runtime_error("normalized conjugation: trace underflow (" +
                                 std::to_string(tr) + ")");
    conj /= tr;
    conj = 0.5 * (conj + Matrix2(conj.adjoint()));
    return DensityMatrix::validated(conj, 1e-10, 1e-10, -1e-10);
}

DensityMatrix evolve_density(const RegimeSolution& solution, const DensityMatrix& rho0,
                             double t) {
    return normalized_conjugation(solution.propagator(t).matrix(), rho0);
}

DensityMatrix evolve_density(const Su11Hamiltonian& h, const DensityMatrix& rho0, double t,
                             const IntegratorConfig& cfg) {
    const Matrix2 u = integrate_U([&h](double tau) { return h.matrix(tau); }, t, cfg);
    return normalized_conjugation(u, rho0);
}

double semigroup_deviation(const Matrix2& h_const, const DensityMatrix& rho0, double s,
                           double t) {
    const Complex mi(0.0, -1.0);
    const Matrix2 u_t = expm(mi * t * h_const);
    const Matrix2 u_s = expm(mi * s * h_const);
    const Matrix2 u_st = expm(mi * (s + t) * h_const);
    const DensityMatrix two_step = normalized_conjugation(u_s, normalized_conjugation(u_t, rho0));
    const DensityMatrix one_step = normalized_conjugation(u_st, rho0);
    return max_abs_diff(two_step.matrix(), one_step.matrix());
}

} // namespace su11
