// quadrature.hpp — globally adaptive Gauss–Kronrod 7/15 integration.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace su11 {

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double achieved_error)
        : std::runtime_error(msg), achieved(achieved_error) {}
    double achieved;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int segments = 1;
};

// Integrates f over [a, b], bisecting the segment with the largest local
// error estimate until the global estimate drops below abs_tol. Throws
// QuadratureError carrying the achieved estimate when the segment cap is
// reached first.
QuadResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                         double abs_tol = 1e-12, int max_segments = 10000);

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12, int max_segments = 10000) {
    return gauss_kronrod(f, a, b, abs_tol, max_segments).value;
}

} // namespace su11
