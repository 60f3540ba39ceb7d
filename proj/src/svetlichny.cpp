#include "svet/svetlichny.hpp"

#include "svet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace svet {

namespace {

constexpr double kUnitTol = 1e-12;

void require_unit(const Vector3& v, const char* name) {
    if (std::abs(v.norm() - 1.0) > kUnitTol)
        throw NonUnitVector(std::string(name) + " has norm " + std::to_string(v.norm()));
}

// Any unit vector orthogonal to the given unit vector.
Vector3 orthogonal_unit(const Vector3& u) {
    const Vector3 trial = std::abs(u.x()) < 0.9 ? Vector3::UnitX() : Vector3::UnitY();
    return u.cross(trial).normalized();
}

}  // namespace

void validate(const MeasurementSettings& s) {
    require_unit(s.a, "a");
    require_unit(s.a_prime, "a'");
    require_unit(s.b, "b");
    require_unit(s.b_prime, "b'");
    require_unit(s.c, "c");
    require_unit(s.c_prime, "c'");
    require_unit(s.d, "d");
    require_unit(s.d_prime, "d'");
}

std::string to_string(Branch branch) {
    switch (branch) {
        case Branch::coherence: return "coherence";
        case Branch::diagonal: return "diagonal";
        case Branch::numeric: return "numeric";
    }
    return "?";
}

Matrix16c svetlichny_operator(const MeasurementSettings& s) {
    validate(s);
    const Matrix2c A = direction_observable(s.a);
    const Matrix2c Ap = direction_observable(s.a_prime);
    const Matrix2c B = direction_observable(s.b);
    const Matrix2c Bp = direction_observable(s.b_prime);
    const Matrix2c C = direction_observable(s.c);
    const Matrix2c Cp = direction_observable(s.c_prime);
    const Matrix2c D = direction_observable(s.d);
    const Matrix2c Dp = direction_observable(s.d_prime);

    const Matrix2c Cm = C - Cp;
    const Matrix2c Cs = C + Cp;

    Matrix16c out = Matrix16c::Zero();
    // (A@B - A'@B') @ [(C-C')@D - (C+C')@D']
    out += kron4(A, B, Cm, D) - kron4(A, B, Cs, Dp);
    out -= kron4(Ap, Bp, Cm, D) - kron4(Ap, Bp, Cs, Dp);
    // - (A'@B + A@B') @ [(C+C')@D + (C-C')@D']
    out -= kron4(Ap, B, Cs, D) + kron4(Ap, B, Cm, Dp);
    out -= kron4(A, Bp, Cs, D) + kron4(A, Bp, Cm, Dp);
    return out;
}

double expectation(const DensityOperator& rho, const MeasurementSettings& s) {
    return (svetlichny_operator(s) * rho.entries).trace().real();
}

LambdaPair lambdas(const CorrelationTensor& t, const Vector3& a, const Vector3& a_prime,
                   const Vector3& b, const Vector3& b_prime, const Vector3& d,
                   const Vector3& d_prime) {
    require_unit(a, "a");
    require_unit(a_prime, "a'");
    require_unit(b, "b");
    require_unit(b_prime, "b'");
    require_unit(d, "d");
    require_unit(d_prime, "d'");

    // M_xy(k,l) = sum_ij x_i y_j t[i][j][k][l]
    const auto contract = [&t](const Vector3& x, const Vector3& y) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const double w = x(i - 1) * y(j - 1);
                if (w == 0.0) continue;
                m += w * t.block(i, j);
            }
        }
        return m;
    };

    const Eigen::Matrix3d m_ab = contract(a, b);
    const Eigen::Matrix3d m_apbp = contract(a_prime, b_prime);
    const Eigen::Matrix3d m_apb = contract(a_prime, b);
    const Eigen::Matrix3d m_abp = contract(a, b_prime);

    LambdaPair p;
    p.lambda0 = m_apbp * d_prime - m_ab * d_prime - m_apb * d - m_abp * d;
    p.lambda1 = m_ab * d - m_apbp * d - m_apb * d_prime - m_abp * d_prime;
    return p;
}

double inner_max(const LambdaPair& p) {
    const double l0 = p.lambda0.squaredNorm();
    const double l1 = p.lambda1.squaredNorm();
    const double g = p.lambda0.dot(p.lambda1);
    const double sum = l0 + l1;
    const double disc = std::sqrt(std::max(0.0, sum * sum - 4.0 * g * g));
    return 2.0 * std::sqrt(std::max(0.0, 0.5 * (sum + disc)));
}

double upper_bound(const LambdaPair& p) {
    return 2.0 * std::sqrt(p.lambda0.squaredNorm() + p.lambda1.squaredNorm());
}

InnerSolution inner_max_settings(const LambdaPair& p) {
    constexpr double kTiny = 1e-300;
    const double n0 = p.lambda0.norm();
    const double n1 = p.lambda1.norm();

    InnerSolution sol;
    if (n0 <= kTiny && n1 <= kTiny) return sol;  // value 0, arbitrary settings

    // Orthonormal basis (f0, f1) of span{lambda0, lambda1} with lambda0 along
    // f0 (or f0 free when lambda0 vanishes).
    Vector3 f0, f1;
    if (n0 > kTiny) {
        f0 = p.lambda0 / n0;
        const Vector3 w = p.lambda1 - f0.dot(p.lambda1) * f0;
        const double wn = w.norm();
        f1 = wn > n1 * 1e-14 ? Vector3(w / wn) : orthogonal_unit(f0);
    } else {
        f1 = p.lambda1 / n1;
        f0 = orthogonal_unit(f1);
    }

    // In (f0, f1) coordinates lambda0 = (n0, 0), lambda1 = (x, y); for
    // e0 = cos(t) f0 + sin(t) f1 and e1 = -sin(t) f0 + cos(t) f1 the squared
    // objective <e0,l0>^2 + <e1,l1>^2 is the quadratic form of
    //   M = [[n0^2 + y^2, -x y], [-x y, x^2]]
    // on (cos t, sin t); the top eigenvector gives the optimal rotation.
    const double x = f0.dot(p.lambda1);
    const double y = f1.dot(p.lambda1);
    const double m00 = n0 * n0 + y * y;
    const double m01 = -x * y;
    const double m11 = x * x;

    const double half_gap = 0.5 * (m00 - m11);
    const double top = 0.5 * (m00 + m11) + std::hypot(half_gap, m01);
    double u0 = m01, u1 = top - m00;
    double v0 = top - m11, v1 = m01;
    if (u0 * u0 + u1 * u1 < v0 * v0 + v1 * v1) {
        u0 = v0;
        u1 = v1;
    }
    const double un = std::hypot(u0, u1);
    if (un <= kTiny) {
        u0 = 1.0;  // isotropic M: any rotation is optimal
        u1 = 0.0;
    } else {
        u0 /= un;
        u1 /= un;
    }

    const Vector3 e0 = u0 * f0 + u1 * f1;
    const Vector3 e1 = -u1 * f0 + u0 * f1;
    const double s0 = e0.dot(p.lambda0);
    const double s1 = e1.dot(p.lambda1);
    const double amp = std::hypot(s0, s1);
    const double cos_a = amp > kTiny ? s0 / amp : 1.0;
    const double sin_a = amp > kTiny ? s1 / amp : 0.0;

    sol.value = 2.0 * amp;
    sol.c = cos_a * e0 + sin_a * e1;
    sol.c_prime = cos_a * e0 - sin_a * e1;
    return sol;
}

SvetlichnyResult svetlichny_xtype(const XTypeState& x) {
    const double coherence = 16.0 * std::numbers::sqrt2 * std::abs(x.pair_value);
    const double diagonal = 4.0 * std::abs(signed_diagonal_sum(x));

    SvetlichnyResult result;
    if (coherence >= diagonal) {
        result.value = coherence;
        result.branch = Branch::coherence;
    } else {
        result.value = diagonal;
        result.branch = Branch::diagonal;
    }
    result.measure = nonlocality_measure(result.value);
    return result;
}

double nonlocality_measure(double value) {
    if (value > kSvetlichnyMax + 1e-6)
        throw OutOfRange("Svetlichny value " + std::to_string(value) +
                         " exceeds the quantum maximum 8*sqrt(2)");
    const double clamped = std::min(value, kSvetlichnyMax);
    return std::max(0.0, (clamped - kSvetlichnyClassicalBound) /
                             (kSvetlichnyMax - kSvetlichnyClassicalBound));
}

}  // namespace svet
