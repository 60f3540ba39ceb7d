#pragma once

#include "svet/pauli.hpp"

namespace svet {

// Four-qubit density operator. Qubit 1 is the most significant bit of the
// computational-basis index (|b1 b2 b3 b4> lives at index b1*8+b2*4+b3*2+b4).
struct DensityOperator {
    Matrix16c entries = Matrix16c::Zero();
};

struct ValidationReport {
    double hermiticity_defect = 0.0;  // max entrywise |rho - rho^dagger|
    double trace_defect = 0.0;        // |tr(rho) - 1|
    double min_eigenvalue = 0.0;      // of the Hermitian part
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;

    bool passed() const { return hermitian_ok && trace_ok && psd_ok; }
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

// Checks Hermiticity, unit trace and positive semidefiniteness (up to the
// numerical slack above) and reports the measured defects.
ValidationReport validate(const DensityOperator& rho);

}  // namespace svet
