#include "su11/hamiltonian.hpp"

#include <cmath>
#include <limits>

namespace su11 {

namespace {

double eval_named(const CoefficientFn& f, double t, const char* name) {
    try {
        return f(t);
    } catch (const std::domain_error& e) {
        throw EvaluationError(std::string(name) + ": " + e.what());
    }
}

double eval_magnitude(const CoefficientFn& f, double t, const char* name) {
    const double v = eval_named(f, t, name);
    if (v < 0.0)
        throw EvaluationError(std::string(name) + ": evaluates to " + std::to_string(v) +
                              " < 0 at t=" + std::to_string(t));
    return v;
}

Matrix2 su11_matrix(double big_omega, Complex omega) {
    Matrix2 m;
    m << Complex(big_omega, 0.0), -omega, std::conj(omega), Complex(-big_omega, 0.0);
    return m;
}

} // namespace

Su11Hamiltonian::Su11Hamiltonian(CoefficientFn big_omega, CoefficientFn omega_abs,
                                 CoefficientFn phi_omega)
    : big_omega_(std::move(big_omega)),
      omega_abs_(std::move(omega_abs)),
      phi_omega_(std::move(phi_omega)) {}

double Su11Hamiltonian::big_omega(double t) const { return eval_named(big_omega_, t, "big_omega"); }

double Su11Hamiltonian::omega_abs(double t) const {
    return eval_magnitude(omega_abs_, t, "omega_abs");
}

double Su11Hamiltonian::phi_omega(double t) const { return eval_named(phi_omega_, t, "phi_omega"); }

Complex Su11Hamiltonian::omega(double t) const {
    return std::polar(omega_abs(t), phi_omega(t));
}

Matrix2 Su11Hamiltonian::matrix(double t) const { return su11_matrix(big_omega(t), omega(t)); }

SolvableScenario::SolvableScenario(double nu, CoefficientFn omega_abs, CoefficientFn phase_rate,
                                   double phi0)
    : nu_(nu),
      omega_abs_(std::move(omega_abs)),
      phase_rate_(std::move(phase_rate)),
      phi0_(phi0) {
    if (!(nu >= 0.0)) throw std::invalid_argument("scenario: nu must be >= 0");
}

double SolvableScenario::omega_abs(double t) const {
    return eval_magnitude(omega_abs_, t, "omega_abs");
}

double SolvableScenario::phase_rate(double t) const {
    return eval_named(phase_rate_, t, "phase_rate");
}

double SolvableScenario::big_omega(double t) const {
    return nu_ * omega_abs(t) - 0.5 * phase_rate(t);
}

double SolvableScenario::phi_omega(double t) const { return phi0_ + phase_rate_.integral(t); }

Complex SolvableScenario::omega(double t) const {
    return std::polar(omega_abs(t), phi_omega(t));
}

Matrix2 SolvableScenario::matrix(double t) const { return su11_matrix(big_omega(t), omega(t)); }

bool SolvableScenario::has_constant_coefficients() const {
    return omega_abs_.is_constant() && phase_rate_.is_constant();
}

SolvableScenario constant_scenario_from_big_omega(double nu, double big_omega0, double c0,
                                                  double phi0) {
    if (!(nu > 0.0))
        throw std::invalid_argument("constant scenario from (Omega0, c0): nu must be > 0");
    const double omega0 = (2.0 * big_omega0 + c0) / (2.0 * nu);
    if (omega0 < 0.0)
        throw std::invalid_argument("constant scenario from (Omega0, c0): |omega0| = " +
                                    std::to_string(omega0) + " < 0");
    return SolvableScenario(nu, CoefficientFn::constant(omega0), CoefficientFn::constant(c0),
                            phi0);
}

bool is_pseudo_hermitian(const Matrix2& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_pseudo_hermitian: tol must be > 0");
    const Matrix2 sz = pauli_z();
    return max_abs_diff(m.adjoint(), sz * m * sz) <= tol;
}

std::string to_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::real: return "REAL";
        case SpectrumKind::degenerate: return "DEGENERATE";
        case SpectrumKind::complex_pair: return "COMPLEX-PAIR";
    }
    return "?";
}

Spectrum spectrum(double big_omega, double omega_abs) {
    const double disc = big_omega * big_omega - omega_abs * omega_abs;
    const Complex root = std::sqrt(Complex(disc, 0.0));
    SpectrumKind kind = SpectrumKind::degenerate;
    if (disc > 0.0) kind = SpectrumKind::real;
    else if (disc < 0.0) kind = SpectrumKind::complex_pair;
    return {root, -root, kind};
}

Spectrum spectrum(const Su11Hamiltonian& h, double t) {
    return spectrum(h.big_omega(t), h.omega_abs(t));
}

Spectrum spectrum(const SolvableScenario& s, double t) {
    return spectrum(s.big_omega(t), s.omega_abs(t));
}

namespace {

QuasiHermitianMetric metric_impl(double big_omega, Complex omega, const Matrix2& h) {
    if (big_omega == 0.0)
        throw SingularMetricError("quasi-Hermitian metric undefined: big_omega = 0");
    Matrix2 eta;
    eta << Complex(1.0, 0.0), -omega / big_omega, -std::conj(omega) / big_omega,
        Complex(1.0, 0.0);
    // consistency of the defining intertwining relation
    const double residual = max_abs_diff(h.adjoint() * eta, eta * h);
    const double scale = std::max(1.0, max_abs(h) * max_abs(eta));
    if (residual > 1e-12 * scale)
        throw std::logic_error("quasi-Hermitian metric: intertwining residual " +
                               std::to_string(residual));
    const bool positive = std::abs(omega) * std::abs(omega) < big_omega * big_omega;
    return {eta, positive};
}

} // namespace

QuasiHermitianMetric quasi_hermitian_metric(const Su11Hamiltonian& h, double t) {
    return metric_impl(h.big_omega(t), h.omega(t), h.matrix(t));
}

QuasiHermitianMetric quasi_hermitian_metric(const SolvableScenario& s, double t) {
    return metric_impl(s.big_omega(t), s.omega(t), s.matrix(t));
}

double reality_threshold(const SolvableScenario& s) {
    if (!s.has_constant_coefficients())
        throw std::invalid_argument("reality_threshold: scenario coefficients must be constant");
    const double omega0 = s.omega_abs(0.0);
    if (!(omega0 > 0.0))
        throw std::invalid_argument("reality_threshold: |omega0| must be > 0");
    const double c0 = s.phase_rate(0.0);
    const double big_omega0 = s.big_omega(0.0);
    if (!(big_omega0 > 0.0))
        throw std::domain_error("reality_threshold: unsupported sign, requires Omega0 > 0 (got " +
                                std::to_string(big_omega0) + ")");
    return 1.0 + c0 / (2.0 * big_omega0);
}

bool is_closed_system(const Su11Hamiltonian& h, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("is_closed_system: empty grid");

    const double tol = 1e-9;
    bool all_zero = true;
    bool any_zero = false;
    for (double t : grid) {
        const double w = h.omega_abs(t);
        if (w == 0.0) any_zero = true;
        else all_zero = false;
    }
    if (all_zero) {
        // H = Ω σz is Hermitian; η₊ = identity. Closed as long as the
        // spectrum stays non-degenerate.
        for (double t : grid)
            if (h.big_omega(t) == 0.0) return false;
        return true;
    }
    if (any_zero) return false; // ratio undefined at some grid points

    const double phi_ref = h.phi_omega(grid.front());
    const double ratio_ref = h.big_omega(grid.front()) / h.omega_abs(grid.front());
    for (double t : grid) {
        if (std::abs(h.phi_omega(t) - phi_ref) > tol * std::max(1.0, std::abs(phi_ref)))
            return false;
        const double ratio = h.big_omega(t) / h.omega_abs(t);
        if (std::abs(ratio - ratio_ref) > tol * std::max(1.0, std::abs(ratio_ref)))
            return false;
        const double w = h.omega_abs(t), om = h.big_omega(t);
        if (!(w * w < om * om)) return false;
    }
    return true;
}

} // namespace su11
