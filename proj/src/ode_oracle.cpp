#include "su11/ode_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace su11 {

namespace {

constexpr long kMaxSteps = 5'000'000;

// Dormand–Prince 5(4) tableau
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
constexpr double e7 = -1.0 / 40.0;

struct Workspace {
    std::vector<double> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
    explicit Workspace(std::size_t n)
        : k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n) {}
};

// one DP5 step; returns scaled RMS error of the embedded 4th-order estimate
double dp5_step(const OdeRhs& rhs, double t, double h, const std::vector<double>& y,
                Workspace& w, double rel_tol, double abs_tol) {
    const std::size_t n = y.size();
    rhs(t, y, w.k1);
    for (std::size_t i = 0; i < n; ++i) w.tmp[i] = y[i] + h * a21 * w.k1[i];
    rhs(t + h / 5.0, w.tmp, w.k2);
    for (std::size_t i = 0; i < n; ++i) w.tmp[i] = y[i] + h * (a31 * w.k1[i] + a32 * w.k2[i]);
    rhs(t + 3.0 * h / 10.0, w.tmp, w.k3);
    for (std::size_t i = 0; i < n; ++i)
        w.tmp[i] = y[i] + h * (a41 * w.k1[i] + a42 * w.k2[i] + a43 * w.k3[i]);
    rhs(t + 4.0 * h / 5.0, w.tmp, w.k4);
    for (std::size_t i = 0; i < n; ++i)
        w.tmp[i] = y[i] + h * (a51 * w.k1[i] + a52 * w.k2[i] + a53 * w.k3[i] + a54 * w.k4[i]);
    rhs(t + 8.0 * h / 9.0, w.tmp, w.k5);
    for (std::size_t i = 0; i < n; ++i)
        w.tmp[i] = y[i] + h * (a61 * w.k1[i] + a62 * w.k2[i] + a63 * w.k3[i] + a64 * w.k4[i] +
                               a65 * w.k5[i]);
    rhs(t + h, w.tmp, w.k6);
    for (std::size_t i = 0; i < n; ++i)
        w.ynew[i] = y[i] + h * (b1 * w.k1[i] + b3 * w.k3[i] + b4 * w.k4[i] + b5 * w.k5[i] +
                                b6 * w.k6[i]);
    rhs(t + h, w.ynew, w.k7);

    double err_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = h * (e1 * w.k1[i] + e3 * w.k3[i] + e4 * w.k4[i] + e5 * w.k5[i] +
                              e6 * w.k6[i] + e7 * w.k7[i]);
        const double sk = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(w.ynew[i]));
        err_sq += (e / sk) * (e / sk);
    }
    return std::sqrt(err_sq / static_cast<double>(n));
}

std::vector<double> integrate_rk45(const OdeRhs& rhs, std::vector<double> y, double t0, double t1,
                                   const IntegratorConfig& cfg) {
    Workspace w(y.size());
    double t = t0;
    double h = std::min(cfg.max_step, t1 - t0);
    long steps = 0;
    while (t < t1) {
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }
        const double err = dp5_step(rhs, t, h, y, w, cfg.rel_tol, cfg.abs_tol);
        if (err <= 1.0) {
            t = last ? t1 : t + h;
            y = w.ynew;
            if (t >= t1) break;
        }
        double fac = (err == 0.0) ? 5.0 : 0.9 * std::pow(err, -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h = std::min(cfg.max_step, h * fac);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw IntegrationError("step size underflow at t=" + std::to_string(t), t);
        if (++steps > kMaxSteps)
            throw IntegrationError("step budget exhausted, reached t=" + std::to_string(t), t);
    }
    return y;
}

std::vector<double> integrate_rk4(const OdeRhs& rhs, std::vector<double> y, double t0, double t1,
                                  const IntegratorConfig& cfg) {
    const double span = t1 - t0;
    const long n = std::max(1L, static_cast<long>(std::ceil(span / cfg.max_step)));
    if (n > kMaxSteps)
        throw IntegrationError("step budget exhausted, reached t=" + std::to_string(t0), t0);
    const double h = span / static_cast<double>(n);
    const std::size_t dim = y.size();
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    double t = t0;
    for (long step = 0; step < n; ++step) {
        rhs(t, y, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + span * static_cast<double>(step + 1) / static_cast<double>(n);
    }
    return y;
}

std::vector<double> pack_U(const Matrix2& u) {
    std::vector<double> y(8);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            y[static_cast<std::size_t>(2 * (2 * r + c))] = u(r, c).real();
            y[static_cast<std::size_t>(2 * (2 * r + c) + 1)] = u(r, c).imag();
        }
    return y;
}

Matrix2 unpack_U(const std::vector<double>& y) {
    Matrix2 u;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            u(r, c) = Complex(y[static_cast<std::size_t>(2 * (2 * r + c))],
                              y[static_cast<std::size_t>(2 * (2 * r + c) + 1)]);
    return u;
}

OdeRhs schroedinger_rhs(const std::function<Matrix2(double)>& hamiltonian) {
    return [hamiltonian](double t, const std::vector<double>& y, std::vector<double>& dydt) {
        const Matrix2 u = unpack_U(y);
        const Matrix2 du = Complex(0.0, -1.0) * (hamiltonian(t) * u);
        dydt = pack_U(du);
    };
}

} // namespace

std::vector<double> integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                                  const IntegratorConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("integrator config: tolerances must be > 0");
    if (!(cfg.max_step > 0.0))
        throw std::invalid_argument("integrator config: max_step must be > 0");
    if (t1 < t0) throw std::invalid_argument("integrate_ode: t1 < t0");
    if (t1 == t0) return y0;
    if (cfg.method == IntegratorConfig::Method::rk4_fixed)
        return integrate_rk4(rhs, std::move(y0), t0, t1, cfg);
    return integrate_rk45(rhs, std::move(y0), t0, t1, cfg);
}

namespace {

double max_step_from(double omega_max, double big_omega_max) {
    const double scale = std::max({omega_max, big_omega_max, 1e-12});
    return 0.01 / scale;
}

} // namespace

double default_max_step(const Su11Hamiltonian& h, double t_end) {
    return max_step_from(h.omega_abs_fn().max_abs_on(0.0, t_end),
                         h.big_omega_fn().max_abs_on(0.0, t_end));
}

double default_max_step(const SolvableScenario& s, double t_end) {
    const double w = s.omega_abs_fn().max_abs_on(0.0, t_end);
    const double c = s.phase_rate_fn().max_abs_on(0.0, t_end);
    return max_step_from(w, s.nu() * w + 0.5 * c);
}

Matrix2 integrate_U(const std::function<Matrix2(double)>& hamiltonian, double t,
                    const IntegratorConfig& cfg) {
    if (t < 0.0) throw std::invalid_argument("integrate_U: t must be >= 0");
    return unpack_U(integrate_ode(schroedinger_rhs(hamiltonian), pack_U(Matrix2::Identity()), 0.0,
                                  t, cfg));
}

std::vector<Matrix2> integrate_U_grid(const std::function<Matrix2(double)>& hamiltonian,
                                      const std::vector<double>& ts,
                                      const IntegratorConfig& cfg) {
    std::vector<Matrix2> out;
    out.reserve(ts.size());
    const OdeRhs rhs = schroedinger_rhs(hamiltonian);
    std::vector<double> y = pack_U(Matrix2::Identity());
    double prev = 0.0;
    for (double t : ts) {
        if (t < prev)
            throw std::invalid_argument("integrate_U_grid: time grid must be non-decreasing");
        if (t > prev) y = integrate_ode(rhs, std::move(y), prev, t, cfg);
        out.push_back(unpack_U(y));
        prev = t;
    }
    return out;
}

Matrix2 RiccatiState::reconstruct_U() const {
    const Complex eu2 = std::exp(u2);
    const Complex emu2 = std::exp(-u2);
    Matrix2 u;
    u << emu2 + u1 * eu2 * u3, u1 * eu2, eu2 * u3, eu2;
    return u;
}

namespace {

RiccatiState integrate_riccati_impl(const std::function<double(double)>& big_omega,
                                    const std::function<Complex(double)>& omega, double t,
                                    const IntegratorConfig& cfg,
                                    const std::function<Matrix2(double)>& hamiltonian) {
    if (t < 0.0) throw std::invalid_argument("integrate_riccati: t must be >= 0");

    const Complex i1(0.0, 1.0);
    auto rhs = [&](double tau, const std::vector<double>& y, std::vector<double>& dydt) {
        const Complex u1(y[0], y[1]), u2(y[2], y[3]);
        if (!(std::abs(u1) <= 1e6))
            throw RiccatiBlowupError(
                "riccati variable u1 escaped (|u1| > 1e6) near t=" + std::to_string(tau), tau);
        const Complex w = omega(tau);
        const Complex wc = std::conj(w);
        const double om = big_omega(tau);
        const Complex du1 = i1 * w - 2.0 * i1 * om * u1 + i1 * wc * u1 * u1;
        const Complex du2 = i1 * om - i1 * wc * u1;
        // forced by i U̇ = H U on the (2,1) entry of the factorized form;
        // the consistency relation u3 = b*/a* fails with a single e^{-u2}
        const Complex du3 = -i1 * wc * std::exp(-2.0 * u2);
        dydt = {du1.real(), du1.imag(), du2.real(), du2.imag(), du3.real(), du3.imag()};
    };

    std::vector<double> y(6, 0.0);
    y = integrate_ode(rhs, std::move(y), 0.0, t, cfg);

    RiccatiState state{Complex(y[0], y[1]), Complex(y[2], y[3]), Complex(y[4], y[5])};

    const Matrix2 u_direct = integrate_U(hamiltonian, t, cfg);
    const double dev = max_abs_diff(state.reconstruct_U(), u_direct);
    const double scale = std::max(1.0, max_abs(u_direct));
    if (dev > 1e-7 * scale)
        throw std::logic_error("riccati reconstruction deviates from direct integration by " +
                               std::to_string(dev));
    return state;
}

} // namespace

RiccatiState integrate_riccati(const Su11Hamiltonian& h, double t, const IntegratorConfig& cfg) {
    return integrate_riccati_impl([&h](double tau) { return h.big_omega(tau); },
                                  [&h](double tau) { return h.omega(tau); }, t, cfg,
                                  [&h](double tau) { return h.matrix(tau); });
}

RiccatiState integrate_riccati(const SolvableScenario& s, double t, const IntegratorConfig& cfg) {
    return integrate_riccati_impl([&s](double tau) { return s.big_omega(tau); },
                                  [&s](double tau) { return s.omega(tau); }, t, cfg,
                                  [&s](double tau) { return s.matrix(tau); });
}

} // namespace su11
