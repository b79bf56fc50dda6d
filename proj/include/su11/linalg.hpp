// linalg.hpp — small complex 2x2 helpers shared by all modules.

#pragma once

#include <Eigen/Core>
#include <complex>

namespace su11 {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

inline Matrix2 pauli_x() {
    Matrix2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline Matrix2 pauli_y() {
    Matrix2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix2 pauli_z() {
    Matrix2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

// entrywise max-norm
inline double max_abs(const Matrix2& m) {
    return m.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    return max_abs(Matrix2(a - b));
}

// exp(M) for a general complex 2x2 matrix, via the traceless split
// M = s*I + A with A^2 = mu^2 * I.
Matrix2 expm(const Matrix2& m);

} // namespace su11
