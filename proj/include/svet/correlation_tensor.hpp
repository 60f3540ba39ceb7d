#pragma once

#include "svet/density_operator.hpp"

#include <array>

namespace svet {

// Pauli coefficient tensor t[i][j][k][l] = tr(rho sigma_i x sigma_j x sigma_k
// x sigma_l), i..l in {0,1,2,3}. A valid density operator satisfies
// t[0][0][0][0] = 1 and |t| <= 1 entrywise, and is reconstructed exactly by
// rho = (1/16) sum t_ijkl sigma_i x sigma_j x sigma_k x sigma_l.
struct CorrelationTensor {
    std::array<double, 256> t{};

    double& at(int i, int j, int k, int l) { return t[((i * 4 + j) * 4 + k) * 4 + l]; }
    double at(int i, int j, int k, int l) const { return t[((i * 4 + j) * 4 + k) * 4 + l]; }

    // 3x3 correlation block T_ij for i, j in {1,2,3}: entry (k-1, l-1) = t_ijkl.
    Eigen::Matrix3d block(int i, int j) const {
        Eigen::Matrix3d out;
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) out(k - 1, l - 1) = at(i, j, k, l);
        return out;
    }
};

CorrelationTensor pauli_tensor(const DensityOperator& rho);

// Inverse of pauli_tensor: (1/16) sum t_ijkl sigma_i x ... x sigma_l.
DensityOperator reconstruct_density(const CorrelationTensor& tensor);

}  // namespace svet
