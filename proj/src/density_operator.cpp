#include "svet/density_operator.hpp"

#include <Eigen/Eigenvalues>

namespace svet {

ValidationReport validate(const DensityOperator& rho) {
    const Matrix16c& m = rho.entries;
    ValidationReport report;

    report.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    report.hermitian_ok = report.hermiticity_defect <= kHermitianTol;

    report.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    report.trace_ok = report.trace_defect <= kTraceTol;

    // Eigenvalues of the Hermitian part; for a valid operator this is m itself.
    const Matrix16c herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix16c> solver(herm, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.psd_ok = report.min_eigenvalue >= kPsdFloor;

    return report;
}

}  // namespace svet
