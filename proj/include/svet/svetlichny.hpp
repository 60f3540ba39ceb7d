#pragma once

#include "svet/correlation_tensor.hpp"
#include "svet/density_operator.hpp"
#include "svet/pauli.hpp"
#include "svet/xtype.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace svet {

inline constexpr double kSvetlichnyClassicalBound = 8.0;
inline const double kSvetlichnyMax = 8.0 * std::sqrt(2.0);  // quantum maximum

// Eight measurement directions, two per observer; all must be unit vectors
// within 1e-12.
struct MeasurementSettings {
    Vector3 a, a_prime, b, b_prime, c, c_prime, d, d_prime;
};

// Throws NonUnitVector naming the offending field.
void validate(const MeasurementSettings& s);

// The two 3-vectors through which the expectation factorizes once the first,
// second and fourth observers' directions are fixed:
//   expectation = <c + c', lambda0> + <c - c', lambda1>.
struct LambdaPair {
    Vector3 lambda0 = Vector3::Zero();
    Vector3 lambda1 = Vector3::Zero();
};

enum class Branch { coherence, diagonal, numeric };

std::string to_string(Branch branch);

struct SvetlichnyResult {
    double value = 0.0;    // maximal expectation S(rho)
    double measure = 0.0;  // normalized genuine-nonlocality measure in [0, 1]
    Branch branch = Branch::numeric;
    std::optional<MeasurementSettings> certificate;  // numeric path only
};

// The 16x16 observable
//   S = (A@B - A'@B') @ [(C-C')@D - (C+C')@D']
//     - (A'@B + A@B') @ [(C+C')@D + (C-C')@D']
// with X = x.sigma for each direction x.
Matrix16c svetlichny_operator(const MeasurementSettings& s);

// Re(tr(S rho)); the imaginary residue is discarded (<= 1e-10 for valid
// inputs).
double expectation(const DensityOperator& rho, const MeasurementSettings& s);

LambdaPair lambdas(const CorrelationTensor& t, const Vector3& a, const Vector3& a_prime,
                   const Vector3& b, const Vector3& b_prime, const Vector3& d,
                   const Vector3& d_prime);

// Exact maximum of <c + c', lambda0> + <c - c', lambda1> over unit c, c':
//   2 sqrt( (L0 + L1 + sqrt((L0 + L1)^2 - 4 <l0,l1>^2)) / 2 ),  L_i = |l_i|^2.
double inner_max(const LambdaPair& p);

// inner_max <= upper_bound = 2 sqrt(L0 + L1), with equality iff <l0,l1> = 0.
double upper_bound(const LambdaPair& p);

// inner_max together with maximizing directions.
struct InnerSolution {
    double value = 0.0;
    Vector3 c = Vector3::UnitX();
    Vector3 c_prime = Vector3::UnitX();
};

InnerSolution inner_max_settings(const LambdaPair& p);

// Closed-form maximum for X-type states:
//   S = max(16 sqrt(2) |pair_value|, 4 |N|),  N = signed_diagonal_sum.
// The coherence branch follows the established anti-diagonal formula; the
// diagonal branch is the exact maximum for states with no coherence (their
// correlation tensor collapses onto the z-axis pair, capping the inner
// maximization at 2|N| per bracket).
SvetlichnyResult svetlichny_xtype(const XTypeState& x);

// max(0, (value - 8) / (8 sqrt(2) - 8)); values in (8 sqrt(2), 8 sqrt(2) +
// 1e-6] clamp to 1; larger values throw OutOfRange.
double nonlocality_measure(double value);

}  // namespace svet
