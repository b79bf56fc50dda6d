#include "su11/linalg.hpp"

#include <cmath>

namespace su11 {

namespace {

// sinh(mu)/mu, stable near mu = 0
Complex sinch(Complex mu) {
    if (std::abs(mu) < 1e-4) {
        const Complex mu2 = mu * mu;
        return 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
    }
    return std::sinh(mu) / mu;
}

} // namespace

Matrix2 expm(const Matrix2& m) {
    const Complex s = 0.5 * (m(0, 0) + m(1, 1));
    Matrix2 a = m;
    a(0, 0) -= s;
    a(1, 1) -= s;
    // a is traceless, so a^2 = (a00^2 + a01*a10) * I
    const Complex mu = std::sqrt(a(0, 0) * a(0, 0) + a(0, 1) * a(1, 0));
    const Matrix2 r = std::cosh(mu) * Matrix2::Identity() + sinch(mu) * a;
    return std::exp(s) * r;
}

} // namespace su11
