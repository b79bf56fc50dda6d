#include "su11/verify.hpp"

#include <cmath>
#include <numbers>

#include "su11/closed_form.hpp"
#include "su11/hamiltonian.hpp"
#include "su11/ode_oracle.hpp"

namespace su11 {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    return out;
}

struct Case {
    std::string label;
    SolvableScenario scenario;
};

// central finite difference of Y along t against the Riccati right-hand side
double riccati_residual(const RegimeSolution& sol, double t, double h) {
    const Complex y_minus = sol.Y(t - h);
    const Complex y_plus = sol.Y(t + h);
    const Complex dy = (y_plus - y_minus) / (2.0 * h);
    const Complex y = sol.Y(t);
    const double w = sol.scenario().omega_abs(t);
    const Complex rhs = -w * y * y - Complex(0.0, 2.0 * sol.nu() * w) * y + w;
    return std::abs(dy - rhs);
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    if (opts.nu_grid.empty()) throw std::invalid_argument("verify: empty nu grid");
    if (!(opts.t_max > 0.0)) throw std::invalid_argument("verify: t_max must be > 0");
    if (opts.time_samples < 2) throw std::invalid_argument("verify: needs >= 2 time samples");

    VerifyReport report;
    double dev_oracle = 0.0, dev_det = 0.0, dev_id1 = 0.0, dev_riccati = 0.0, dev_u1 = 0.0;

    const auto ts = linspace(0.0, opts.t_max, opts.time_samples);

    std::vector<Case> cases;
    for (double nu : opts.nu_grid) {
        cases.push_back({"constant, nu=" + std::to_string(nu),
                         SolvableScenario(nu, CoefficientFn::constant(1.0),
                                          CoefficientFn::constant(0.0))});
        if (opts.include_time_dependent) {
            // |ω| = 1 + 0.5 sin t, c = 0.3 cos t
            cases.push_back(
                {"time-dependent, nu=" + std::to_string(nu),
                 SolvableScenario(nu, CoefficientFn::sinusoid(1.0, 0.5, 1.0, 0.0),
                                  CoefficientFn::sinusoid(0.0, 0.3, 1.0,
                                                          std::numbers::pi / 2))});
        }
    }

    for (const auto& c : cases) {
        const RegimeSolution sol(c.scenario);

        IntegratorConfig cfg;
        cfg.max_step = default_max_step(c.scenario, opts.t_max);
        const auto us = integrate_U_grid(
            [&c](double tau) { return c.scenario.matrix(tau); }, ts, cfg);

        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double t = ts[i];
            const Propagator u = sol.propagator(t);
            dev_oracle = std::max(dev_oracle, max_abs_diff(u.matrix(), us[i]));
            dev_det = std::max(dev_det, sol.det_identity_residual(t));
            const PhaseIntegrals ph = sol.phase_integrals(t);
            dev_id1 = std::max(dev_id1, std::abs(std::exp(2.0 * ph.r) *
                                                     sol.one_minus_abs_Y_sq(t) -
                                                 1.0));
            if (t > 0.0) {
                const double h = 1e-5 * std::max(1.0, t);
                if (t - h > 0.0)
                    dev_riccati = std::max(dev_riccati, riccati_residual(sol, t, h));
            }
        }

        // change of variable u1 = i e^{iφ_ω} Y at a spot check time
        const double t_u1 = 0.73 * opts.t_max;
        const RiccatiState rs = integrate_riccati(c.scenario, t_u1, cfg);
        const Complex u1_closed = Complex(0.0, 1.0) *
                                  std::polar(1.0, c.scenario.phi_omega(t_u1)) * sol.Y(t_u1);
        dev_u1 = std::max(dev_u1, std::abs(rs.u1 - u1_closed));
    }

    auto add = [&report](const std::string& name, double dev, double tol) {
        report.checks.push_back({name, dev, tol, dev <= tol});
    };
    add("closed form vs ODE oracle (max entry deviation)", dev_oracle, opts.tol_oracle);
    add("determinant identity |det U - 1|", dev_det, opts.tol_det);
    add("amplitude identity |exp(2r)(1-|Y|^2) - 1|", dev_id1, opts.tol_id1);
    add("riccati residual (finite differences)", dev_riccati, opts.tol_riccati);
    add("change of variable u1 = i exp(i phi) Y", dev_u1, opts.tol_u1);
    return report;
}

} // namespace su11
