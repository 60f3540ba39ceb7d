#include "svet/correlation_tensor.hpp"

namespace svet {

namespace {

// Each Pauli matrix has exactly one nonzero entry per row/column, so traces
// against sigma_i x sigma_j x sigma_k x sigma_l reduce to 16 terms instead of
// a dense 16x16 contraction. flip[p] says whether the nonzero partner bit is
// inverted; entry(p, b) = sigma_p(b, b ^ flip[p]).
constexpr int kFlip[4] = {0, 1, 1, 0};

Complex pauli_entry(int p, int row_bit) {
    switch (p) {
        case 0: return {1.0, 0.0};
        case 1: return {1.0, 0.0};
        case 2: return row_bit == 0 ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        default: return row_bit == 0 ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    }
}

}  // namespace

CorrelationTensor pauli_tensor(const DensityOperator& rho) {
    CorrelationTensor tensor;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    const int p[4] = {i, j, k, l};
                    Complex sum = 0.0;
                    // tr(rho K) = sum_c rho(r(c), c) K(c, r(c)) with r the
                    // unique nonzero column of K's row c.
                    for (int c = 0; c < 16; ++c) {
                        int r = c;
                        Complex value(1.0, 0.0);
                        for (int qubit = 0; qubit < 4; ++qubit) {
                            const int bit = 3 - qubit;  // qubit 1 = MSB
                            const int cb = (c >> bit) & 1;
                            r ^= kFlip[p[qubit]] << bit;
                            value *= pauli_entry(p[qubit], cb);
                        }
                        sum += rho.entries(r, c) * value;
                    }
                    tensor.at(i, j, k, l) = sum.real();
                }
            }
        }
    }
    return tensor;
}

DensityOperator reconstruct_density(const CorrelationTensor& tensor) {
    DensityOperator rho;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    const double t = tensor.at(i, j, k, l);
                    if (t == 0.0) continue;
                    const int p[4] = {i, j, k, l};
                    for (int c = 0; c < 16; ++c) {
                        int r = c;
                        Complex value(1.0, 0.0);
                        for (int qubit = 0; qubit < 4; ++qubit) {
                            const int bit = 3 - qubit;
                            const int rb = ((c >> bit) & 1) ^ kFlip[p[qubit]];
                            r ^= kFlip[p[qubit]] << bit;
                            value *= pauli_entry(p[qubit], rb);
                        }
                        rho.entries(r, c) += (t / 16.0) * value;
                    }
                }
            }
        }
    }
    return rho;
}

}  // namespace svet
