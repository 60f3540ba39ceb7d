#include "svet/mode_state.hpp"

#include "svet/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace svet {

namespace {

std::ptrdiff_t find_mode(const std::vector<ModeLabel>& order, const ModeLabel& label) {
    const auto it = std::find(order.begin(), order.end(), label);
    if (it == order.end()) return -1;
    return it - order.begin();
}

}  // namespace

std::string to_string(ModeKind kind) {
    switch (kind) {
        case ModeKind::kruskal: return "kruskal";
        case ModeKind::out: return "out";
        case ModeKind::in: return "in";
        case ModeKind::A: return "A";
        case ModeKind::B: return "B";
        case ModeKind::L: return "L";
        case ModeKind::R: return "R";
    }
    return "?";
}

std::string to_string(const ModeLabel& label) {
    return to_string(label.kind) + "_" + std::to_string(label.index);
}

double norm(const ModeState& state) { return state.amplitudes.norm(); }

ModeState make_two_branch_state(const std::vector<ModeLabel>& modes, Complex alpha0,
                                Complex alpha1) {
    ModeState state;
    state.order = modes;
    const Eigen::Index dim = Eigen::Index{1} << modes.size();
    state.amplitudes = Eigen::VectorXcd::Zero(dim);
    state.amplitudes(0) += alpha0;
    state.amplitudes(dim - 1) += alpha1;
    return state;
}

ModeState squeeze_mode(const ModeState& state, const ModeLabel& target,
                       const ModeLabel& mode0, const ModeLabel& mode1, double cos_coeff,
                       double sin_coeff) {
    const std::ptrdiff_t pos = find_mode(state.order, target);
    if (pos < 0) throw UnknownMode("no mode labeled " + to_string(target));

    const int nbits = static_cast<int>(state.order.size());
    const int shift = nbits - 1 - static_cast<int>(pos);  // bit position of target

    ModeState result;
    result.order = state.order;
    result.order[static_cast<std::size_t>(pos)] = mode0;
    result.order.insert(result.order.begin() + pos + 1, mode1);
    result.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << (nbits + 1));

    const Eigen::Index low_mask = (Eigen::Index{1} << shift) - 1;
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        const Complex a = state.amplitudes(i);
        if (a == Complex{0.0, 0.0}) continue;
        const Eigen::Index high = i >> (shift + 1);  // bits above the target
        const Eigen::Index low = i & low_mask;       // bits below the target
        const Eigen::Index target_bit = (i >> shift) & 1;
        // New layout: [high | bit0 | bit1 | low], low keeps `shift` bits.
        const auto compose = [&](Eigen::Index b0, Eigen::Index b1) {
            return (((high << 1 | b0) << 1 | b1) << shift) | low;
        };
        if (target_bit == 0) {
            result.amplitudes(compose(0, 0)) += a * cos_coeff;
            result.amplitudes(compose(1, 1)) += a * sin_coeff;
        } else {
            result.amplitudes(compose(1, 0)) += a;
        }
    }
    return result;
}

Eigen::MatrixXcd partial_trace_general(const ModeState& state,
                                       const std::vector<ModeLabel>& keep) {
    const int nbits = static_cast<int>(state.order.size());
    std::vector<int> keep_shift;  // bit position of each kept mode
    keep_shift.reserve(keep.size());
    for (const ModeLabel& label : keep) {
        const std::ptrdiff_t pos = find_mode(state.order, label);
        if (pos < 0) throw UnknownMode("no mode labeled " + to_string(label));
        keep_shift.push_back(nbits - 1 - static_cast<int>(pos));
    }

    std::vector<int> traced_shift;
    for (int p = 0; p < nbits; ++p) {
        const int shift = nbits - 1 - p;
        if (std::find(keep_shift.begin(), keep_shift.end(), shift) == keep_shift.end())
            traced_shift.push_back(shift);
    }

    const int nkeep = static_cast<int>(keep.size());
    const int ntraced = static_cast<int>(traced_shift.size());
    const auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
        Eigen::Index idx = 0;
        for (int b = 0; b < nkeep; ++b)
            idx |= ((kept_bits >> (nkeep - 1 - b)) & 1) << keep_shift[static_cast<std::size_t>(b)];
        for (int b = 0; b < ntraced; ++b)
            idx |= ((traced_bits >> (ntraced - 1 - b)) & 1)
                   << traced_shift[static_cast<std::size_t>(b)];
        return idx;
    };

    const Eigen::Index dim = Eigen::Index{1} << nkeep;
    const Eigen::Index env = Eigen::Index{1} << ntraced;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            Complex sum = 0.0;
            for (Eigen::Index e = 0; e < env; ++e)
                sum += state.amplitudes(full_index(r, e)) *
                       std::conj(state.amplitudes(full_index(c, e)));
            rho(r, c) = sum;
        }
    }
    return rho;
}

DensityOperator partial_trace(const ModeState& state, const std::vector<ModeLabel>& keep) {
    if (keep.size() != 4) {
        throw WrongKeepCount("need exactly 4 modes to keep, got " +
                             std::to_string(keep.size()));
    }
    DensityOperator rho;
    rho.entries = partial_trace_general(state, keep);
    return rho;
}

}  // namespace svet
