#pragma once

#include <Eigen/Dense>
#include <complex>

namespace svet {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix16c = Eigen::Matrix<Complex, 16, 16>;
using Vector3 = Eigen::Vector3d;

inline const Matrix2c& pauli(int i) {
    static const Matrix2c sigma[4] = {
        (Matrix2c() << 1, 0, 0, 1).finished(),
        (Matrix2c() << 0, 1, 1, 0).finished(),
        (Matrix2c() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
        (Matrix2c() << 1, 0, 0, -1).finished(),
    };
    return sigma[i];
}

// Observable n.sigma for a real direction vector (not necessarily unit).
inline Matrix2c direction_observable(const Vector3& n) {
    return n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3);
}

// Kronecker product of four 2x2 matrices; factor order = qubit order, with
// qubit 1 the most significant bit of the 16-dim basis index.
inline Matrix16c kron4(const Matrix2c& m1, const Matrix2c& m2, const Matrix2c& m3,
                       const Matrix2c& m4) {
    Matrix16c out;
    for (int r = 0; r < 16; ++r) {
        const int r1 = (r >> 3) & 1, r2 = (r >> 2) & 1, r3 = (r >> 1) & 1, r4 = r & 1;
        for (int c = 0; c < 16; ++c) {
            const int c1 = (c >> 3) & 1, c2 = (c >> 2) & 1, c3 = (c >> 1) & 1, c4 = c & 1;
            out(r, c) = m1(r1, c1) * m2(r2, c2) * m3(r3, c3) * m4(r4, c4);
        }
    }
    return out;
}

}  // namespace svet
