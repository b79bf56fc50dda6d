#include "su11/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "su11/quadrature.hpp"

namespace su11 {

namespace {

constexpr double kRationalBand = 1e-6;
constexpr double kPi = std::numbers::pi;

} // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::trigonometric: return "trigonometric";
        case Regime::hyperbolic: return "hyperbolic";
        case Regime::rational: return "rational";
        case Regime::zero: return "zero";
    }
    return "?";
}

Regime classify_regime(double nu) {
    if (!(nu >= 0.0)) throw std::invalid_argument("regime: nu must be >= 0");
    if (std::abs(nu - 1.0) <= kRationalBand) return Regime::rational;
    if (nu == 0.0) return Regime::zero;
    return nu < 1.0 ? Regime::hyperbolic : Regime::trigonometric;
}

Complex regime_Y(double nu, double chi) {
    switch (classify_regime(nu)) {
        case Regime::trigonometric: {
            const double k = std::sqrt(nu * nu - 1.0);
            const double x = k * chi;
            const double sn = std::sin(x), cs = std::cos(x);
            const double denom = nu * nu - cs * cs; // ≥ ν² − 1 > 0
            return Complex(k * sn * cs, -nu * sn * sn) / denom;
        }
        case Regime::hyperbolic: {
            const double k = std::sqrt(1.0 - nu * nu);
            const double x = k * chi;
            const double th = std::tanh(x);
            const double sech = 1.0 / std::cosh(x);
            const double denom = 1.0 - nu * nu * sech * sech; // ≥ 1 − ν² > 0
            return Complex(k * th, -nu * th * th) / denom;
        }
        case Regime::rational:
            return Complex(chi, -chi * chi) / (chi * chi + 1.0);
        case Regime::zero:
            return Complex(std::tanh(chi), 0.0);
    }
    return {};
}

double regime_abs_Y_sq(double nu, double chi) {
    switch (classify_regime(nu)) {
        case Regime::trigonometric: {
            const double k = std::sqrt(nu * nu - 1.0);
            const double sn = std::sin(k * chi), cs = std::cos(k * chi);
            return sn * sn / (nu * nu - cs * cs);
        }
        case Regime::hyperbolic: {
            const double k = std::sqrt(1.0 - nu * nu);
            const double th = std::tanh(k * chi);
            const double sech = 1.0 / std::cosh(k * chi);
            return th * th / (1.0 - nu * nu * sech * sech);
        }
        case Regime::rational:
            return chi * chi / (1.0 + chi * chi);
        case Regime::zero: {
            const double th = std::tanh(chi);
            return th * th;
        }
    }
    return 0.0;
}

double regime_one_minus_abs_Y_sq(double nu, double chi) {
    switch (classify_regime(nu)) {
        case Regime::trigonometric: {
            const double k = std::sqrt(nu * nu - 1.0);
            const double cs = std::cos(k * chi);
            return (nu * nu - 1.0) / (nu * nu - cs * cs);
        }
        case Regime::hyperbolic: {
            const double k = std::sqrt(1.0 - nu * nu);
            const double sech = 1.0 / std::cosh(k * chi);
            const double s2 = sech * sech;
            return s2 * (1.0 - nu * nu) / (1.0 - nu * nu * s2);
        }
        case Regime::rational:
            return 1.0 / (1.0 + chi * chi);
        case Regime::zero: {
            const double sech = 1.0 / std::cosh(chi);
            return sech * sech;
        }
    }
    return 1.0;
}

double regime_phase(double nu, double chi) {
    switch (classify_regime(nu)) {
        case Regime::trigonometric: {
            const double k = std::sqrt(nu * nu - 1.0);
            const double x = k * chi;
            // unwrap: m counts crossings of x through π/2 + jπ; the reduced
            // angle xi keeps tan's sign consistent with m at the boundary
            const double m = std::floor(x / kPi + 0.5);
            const double xi = x - m * kPi;
            return -std::atan(nu * std::tan(xi) / k) - m * kPi;
        }
        case Regime::hyperbolic: {
            const double k = std::sqrt(1.0 - nu * nu);
            return -std::atan(nu * std::tanh(k * chi) / k);
        }
        case Regime::rational:
            return -std::atan(chi);
        case Regime::zero:
            return 0.0;
    }
    return 0.0;
}

double transition_probability_chi(double nu, double chi) {
    const double q = regime_abs_Y_sq(nu, chi);
    return q / (1.0 + q);
}

RegimeSolution::RegimeSolution(SolvableScenario scenario)
    : scenario_(std::move(scenario)), regime_(classify_regime(scenario_.nu())) {}

double RegimeSolution::chi(double t) const {
    if (t < 0.0) throw std::invalid_argument("chi: t must be >= 0");
    if (t == 0.0) return 0.0;
    return integrate([this](double tau) { return scenario_.omega_abs(tau); }, 0.0, t, quad_tol_,
                     quad_cap_);
}

Complex RegimeSolution::Y(double t) const { return regime_Y(nu(), chi(t)); }

double RegimeSolution::one_minus_abs_Y_sq(double t) const {
    return regime_one_minus_abs_Y_sq(nu(), chi(t));
}

PhaseIntegrals RegimeSolution::phase_integrals(double t) const {
    PhaseIntegrals ph;
    const double chi_t = chi(t);
    if (t != 0.0) {
        auto chi_at = [this](double tau) {
            if (tau == 0.0) return 0.0;
            return integrate([this](double u) { return scenario_.omega_abs(u); }, 0.0, tau,
                             inner_quad_tol_, quad_cap_);
        };
        ph.r = integrate(
            [&](double tau) {
                return scenario_.omega_abs(tau) * regime_Y(nu(), chi_at(tau)).real();
            },
            0.0, t, quad_tol_, quad_cap_);
        const double s_im = integrate(
            [&](double tau) {
                return scenario_.omega_abs(tau) * regime_Y(nu(), chi_at(tau)).imag();
            },
            0.0, t, quad_tol_, quad_cap_);
        const double s_omega = integrate(
            [this](double tau) { return scenario_.big_omega(tau); }, 0.0, t, quad_tol_,
            quad_cap_);
        ph.s = s_omega + s_im;
        ph.phi_nu = regime_phase(nu(), chi_t);
        ph.y = 0.5 * kPi + 2.0 * nu() * chi_t - 2.0 * s_omega + ph.phi_nu;
    } else {
        ph.y = 0.5 * kPi;
    }
    return ph;
}

Propagator RegimeSolution::assemble(double t, double chi_t, const PhaseIntegrals& ph) const {
    // a* = exp(u2) = exp(r + is); b = u1 a* with u1 = i e^{iφ_ω} Y. Composing
    // b from the complex Y keeps its phase correct through the zeros of Y,
    // where the unwrapped phi_nu is off by π from arg Y.
    const double er = std::exp(ph.r);
    Propagator u;
    u.a = er * std::polar(1.0, -ph.s);
    u.b = Complex(0.0, 1.0) * std::polar(1.0, scenario_.phi_omega(t)) * regime_Y(nu(), chi_t) *
          er * std::polar(1.0, ph.s);
    return u;
}

Propagator RegimeSolution::propagator(double t) const {
    return assemble(t, chi(t), phase_integrals(t));
}

double RegimeSolution::det_identity_residual(double t) const {
    const PhaseIntegrals ph = phase_integrals(t);
    return std::abs(std::exp(2.0 * ph.r) * one_minus_abs_Y_sq(t) - 1.0);
}

double RegimeSolution::transition_probability(double t) const {
    return transition_probability_chi(nu(), chi(t));
}

Matrix2 RegimeSolution::effective_hamiltonian(double t) const {
    const double w = scenario_.omega_abs(t);
    const double z = scenario_.big_omega(t) + 0.5 * scenario_.phase_rate(t);
    Matrix2 h;
    h << Complex(z, 0.0), Complex(-w, 0.0), Complex(w, 0.0), Complex(-z, 0.0);
    return h;
}

std::vector<RegimeSolution::SweepPoint> RegimeSolution::sweep(const std::vector<double>& ts) const {
    std::vector<SweepPoint> out;
    out.reserve(ts.size());
    double prev_t = 0.0;
    double chi_acc = 0.0, r_acc = 0.0, s_im_acc = 0.0, s_om_acc = 0.0;
    for (double t : ts) {
        if (t < prev_t) throw std::invalid_argument("sweep: time grid must be non-decreasing");
        if (t < 0.0) throw std::invalid_argument("sweep: times must be >= 0");
        if (t > prev_t) {
            const double chi_base = chi_acc;
            const double t_base = prev_t;
            auto chi_at = [&](double tau) {
                if (tau == t_base) return chi_base;
                return chi_base + integrate(
                                      [this](double u) { return scenario_.omega_abs(u); },
                                      t_base, tau, inner_quad_tol_, quad_cap_);
            };
            chi_acc += integrate([this](double u) { return scenario_.omega_abs(u); }, prev_t, t,
                                 inner_quad_tol_, quad_cap_);
            r_acc += integrate(
                [&](double tau) {
                    return scenario_.omega_abs(tau) * regime_Y(nu(), chi_at(tau)).real();
                },
                prev_t, t, inner_quad_tol_, quad_cap_);
            s_im_acc += integrate(
                [&](double tau) {
                    return scenario_.omega_abs(tau) * regime_Y(nu(), chi_at(tau)).imag();
                },
                prev_t, t, inner_quad_tol_, quad_cap_);
            s_om_acc += integrate([this](double tau) { return scenario_.big_omega(tau); }, prev_t,
                                  t, inner_quad_tol_, quad_cap_);
        }
        SweepPoint p;
        p.t = t;
        p.chi = chi_acc;
        p.phase.r = r_acc;
        p.phase.s = s_om_acc + s_im_acc;
        p.phase.phi_nu = regime_phase(nu(), chi_acc);
        p.phase.y = 0.5 * kPi + 2.0 * nu() * chi_acc - 2.0 * s_om_acc + p.phase.phi_nu;
        p.u = assemble(t, chi_acc, p.phase);
        out.push_back(p);
        prev_t = t;
    }
    return out;
}

} // namespace su11
