#pragma once

#include "svet/density_operator.hpp"

#include <array>
#include <bit>

namespace svet {

// X-type fast-path representation: the 16 diagonal probabilities plus at most
// one anti-diagonal conjugate pair rho_{i, 17-i} (1-based, pair_index = i <= 8).
struct XTypeState {
    std::array<double, 16> diag{};
    int pair_index = 1;          // 1-based row of the pair; column is 17 - pair_index
    Complex pair_value = 0.0;    // rho_{pair_index, 17 - pair_index}
};

inline constexpr double kXTypeTol = 1e-10;

// Sign of the 0-based basis index under sigma_3 x sigma_3 x sigma_3 x sigma_3:
// (-1)^popcount(index).
inline int antidiagonal_sign(int index) {
    return (std::popcount(static_cast<unsigned>(index)) % 2 == 0) ? 1 : -1;
}

// N = <sigma_3 x sigma_3 x sigma_3 x sigma_3> = sum_k sign(k) diag[k].
double signed_diagonal_sum(const XTypeState& x);

// Extracts the X-type representation, or throws NotXType when any coherence
// off the anti-diagonal exceeds tol, or more than one anti-diagonal pair does.
// Purely diagonal states report pair_index 1 with value 0.
XTypeState classify_xtype(const DensityOperator& rho, double tol = kXTypeTol);

// Embeds the representation back into a dense operator.
DensityOperator to_density(const XTypeState& x);

}  // namespace svet
