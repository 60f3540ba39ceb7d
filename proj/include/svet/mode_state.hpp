#pragma once

#include "svet/density_operator.hpp"
#include "svet/pauli.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace svet {

// Tensor-factor labels for multi-mode pure states.  `kruskal`, `out`, `in`
// label the one-horizon construction; `A`, `L` and `B`, `R` label the
// two-horizon construction (exterior/interior with respect to each horizon).
enum class ModeKind { kruskal, out, in, A, B, L, R };

std::string to_string(ModeKind kind);

struct ModeLabel {
    ModeKind kind = ModeKind::kruskal;
    int index = 1;  // 1-based

    friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

std::string to_string(const ModeLabel& label);

// Pure state over K labeled two-level modes.  `order[0]` is the most
// significant bit of the amplitude index.
struct ModeState {
    std::vector<ModeLabel> order;
    Eigen::VectorXcd amplitudes;
};

double norm(const ModeState& state);

// alpha0 |0...0> + alpha1 |1...1> over the given modes.
ModeState make_two_branch_state(const std::vector<ModeLabel>& modes, Complex alpha0,
                                Complex alpha1);

// Replaces `target` by the ordered pair (mode0, mode1) at its tensor position:
//   |0>_target -> cos_coeff |0 0> + sin_coeff |1 1>
//   |1>_target -> |1 0>
// i.e. the vacuum becomes a two-mode squeezed vacuum and the excited state a
// single excitation of the first new mode.
ModeState squeeze_mode(const ModeState& state, const ModeLabel& target,
                       const ModeLabel& mode0, const ModeLabel& mode1, double cos_coeff,
                       double sin_coeff);

// Reduced density matrix over the kept modes in the listed order (first kept
// label = most significant bit); works for any keep count 1..K.
Eigen::MatrixXcd partial_trace_general(const ModeState& state,
                                       const std::vector<ModeLabel>& keep);

// Four-mode reduction into the fixed 16x16 container.
DensityOperator partial_trace(const ModeState& state, const std::vector<ModeLabel>& keep);

}  // namespace svet
