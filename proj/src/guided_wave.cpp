#include "su11/guided_wave.hpp"

#include <cmath>
#include <numbers>

#include "su11/closed_form.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;

bool coupling_vanishes(const CoupledModeProblem& p, double z_max) {
    return p.k_abs.max_abs_on(0.0, z_max) < 1e-15;
}

// (B̃, Ã) at z → (A, B) with the tilde factors removed
ModeAmplitudes untilde(const Vector2& v_swapped, double delta, double z) {
    const Complex a_tilde = v_swapped(1);
    const Complex b_tilde = v_swapped(0);
    ModeAmplitudes m;
    m.A = a_tilde * std::polar(1.0, -0.5 * delta * z);
    m.B = b_tilde * std::polar(1.0, 0.5 * delta * z);
    return m;
}

Vector2 initial_swapped(const CoupledModeProblem& p) {
    Vector2 v;
    v << p.b0, p.a0;
    return v;
}

} // namespace

Su11Hamiltonian to_su11(const CoupledModeProblem& p) {
    return Su11Hamiltonian(CoefficientFn::constant(0.5 * p.delta), p.k_abs,
                           p.phi_k.affine(-1.0, -0.5 * kPi));
}

std::optional<SolvableScenario> detect_solvable(const CoupledModeProblem& p, double z_max,
                                                double tol, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("detect_solvable: needs >= 2 grid points");

    // fit nu where |k| is largest, then check the residual everywhere
    double nu = 0.0, best_k = 0.0;
    std::vector<double> zs(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        zs[static_cast<std::size_t>(i)] = z_max * static_cast<double>(i) / (grid_points - 1);
    for (double z : zs) {
        const double k = p.k_abs(z);
        if (k < 0.0) return std::nullopt;
        if (k > best_k) {
            best_k = k;
            nu = (p.delta - p.phi_k.derivative(z)) / (2.0 * k);
        }
    }
    if (best_k == 0.0 || nu < 0.0) return std::nullopt;
    for (double z : zs) {
        const double residual = 2.0 * nu * p.k_abs(z) + p.phi_k.derivative(z) - p.delta;
        if (std::abs(residual) > tol) return std::nullopt;
    }

    const auto phi_k_rate = p.phi_k.derivative_fn();
    if (!phi_k_rate) return std::nullopt; // table phase: no exact rate in the family

    const double phi0 = -p.phi_k(0.0) - 0.5 * kPi;
    return SolvableScenario(nu, p.k_abs, phi_k_rate->affine(-1.0, 0.0), phi0);
}

double mode_flux(const ModeAmplitudes& m) { return std::norm(m.A) - std::norm(m.B); }

ModeAmplitudes propagate_modes(const CoupledModeProblem& p, double z) {
    const Su11Hamiltonian h = to_su11(p);
    IntegratorConfig cfg;
    cfg.max_step = default_max_step(h, z);
    return propagate_modes(p, z, cfg);
}

ModeAmplitudes propagate_modes(const CoupledModeProblem& p, double z,
                               const IntegratorConfig& cfg) {
    if (z < 0.0) throw std::invalid_argument("propagate_modes: z must be >= 0");
    if (coupling_vanishes(p, z)) return {p.a0, p.b0};

    Matrix2 u;
    if (const auto scenario = detect_solvable(p, z)) {
        u = RegimeSolution(*scenario).propagator(z).matrix();
    } else {
        const Su11Hamiltonian h = to_su11(p);
        u = integrate_U([&h](double zz) { return h.matrix(zz); }, z, cfg);
    }
    return untilde(u * initial_swapped(p), p.delta, z);
}

std::vector<ModeAmplitudes> propagate_modes_grid(const CoupledModeProblem& p,
                                                 const std::vector<double>& zs) {
    const Su11Hamiltonian h = to_su11(p);
    const double z_end = zs.empty() ? 0.0 : zs.back();
    IntegratorConfig cfg;
    cfg.max_step = default_max_step(h, std::max(z_end, 1e-6));
    return propagate_modes_grid(p, zs, cfg);
}

std::vector<ModeAmplitudes> propagate_modes_grid(const CoupledModeProblem& p,
                                                 const std::vector<double>& zs,
                                                 const IntegratorConfig& cfg) {
    std::vector<ModeAmplitudes> out;
    out.reserve(zs.size());
    if (zs.empty()) return out;
    const double z_end = zs.back();
    if (coupling_vanishes(p, z_end)) {
        for (std::size_t i = 0; i < zs.size(); ++i) out.push_back({p.a0, p.b0});
        return out;
    }

    const Vector2 v0 = initial_swapped(p);
    if (const auto scenario = detect_solvable(p, z_end)) {
        const RegimeSolution sol(*scenario);
        const auto points = sol.sweep(zs);
        for (const auto& pt : points)
            out.push_back(untilde(pt.u.matrix() * v0, p.delta, pt.t));
    } else {
        const Su11Hamiltonian h = to_su11(p);
        const auto us = integrate_U_grid([&h](double zz) { return h.matrix(zz); }, zs, cfg);
        for (std::size_t i = 0; i < zs.size(); ++i)
            out.push_back(untilde(us[i] * v0, p.delta, zs[i]));
    }
    return out;
}

} // namespace su11
