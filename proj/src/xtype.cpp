#include "svet/xtype.hpp"

#include "svet/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace svet {

double signed_diagonal_sum(const XTypeState& x) {
    double sum = 0.0;
    for (int k = 0; k < 16; ++k) sum += antidiagonal_sign(k) * x.diag[k];
    return sum;
}

XTypeState classify_xtype(const DensityOperator& rho, double tol) {
    const Matrix16c& m = rho.entries;
    XTypeState x;
    for (int k = 0; k < 16; ++k) x.diag[k] = m(k, k).real();

    int pair_row = 0;  // 0-based row of the found pair, or -1 if none
    bool found = false;
    for (int r = 0; r < 16; ++r) {
        for (int c = r + 1; c < 16; ++c) {
            if (std::abs(m(r, c)) <= tol) continue;
            if (r + c != 15) {
                throw NotXType("coherence outside the anti-diagonal at (" +
                               std::to_string(r + 1) + "," + std::to_string(c + 1) +
                               "), modulus " + std::to_string(std::abs(m(r, c))));
            }
            if (found) {
                throw NotXType("more than one anti-diagonal pair above tolerance");
            }
            found = true;
            pair_row = r;
        }
    }
    if (found) {
        x.pair_index = pair_row + 1;
        x.pair_value = m(pair_row, 15 - pair_row);
    } else {
        x.pair_index = 1;
        x.pair_value = 0.0;
    }
    return x;
}

DensityOperator to_density(const XTypeState& x) {
    DensityOperator rho;
    for (int k = 0; k < 16; ++k) rho.entries(k, k) = x.diag[k];
    const int r = x.pair_index - 1;
    const int c = 15 - r;
    rho.entries(r, c) += x.pair_value;
    rho.entries(c, r) += std::conj(x.pair_value);
    return rho;
}

}  // namespace svet
