#pragma once

#include "svet/correlation_tensor.hpp"
#include "svet/density_operator.hpp"
#include "svet/svetlichny.hpp"

#include <array>
#include <cstdint>

namespace svet {

// Polar/azimuthal angle pairs for the six free directions: a (alpha1, alpha2),
// b (alpha3, alpha4), d (alpha5, alpha6) and the primed partners a', b', d'
// (beta1..beta6). The third observer's directions are optimized analytically
// by inner_max, halving the search dimension.
struct AngleVector {
    double alpha1 = 0, alpha2 = 0, alpha3 = 0, alpha4 = 0, alpha5 = 0, alpha6 = 0;
    double beta1 = 0, beta2 = 0, beta3 = 0, beta4 = 0, beta5 = 0, beta6 = 0;

    std::array<double, 12> to_array() const {
        return {alpha1, alpha2, alpha3, alpha4, alpha5, alpha6,
                beta1,  beta2,  beta3,  beta4,  beta5,  beta6};
    }
    static AngleVector from_array(const std::array<double, 12>& v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5],
                v[6], v[7], v[8], v[9], v[10], v[11]};
    }
};

struct SixDirections {
    Vector3 a, a_prime, b, b_prime, d, d_prime;
};

// x = (sin p sin q, sin p cos q, cos p) for each (polar, azimuth) pair; always
// unit vectors.
SixDirections angle_directions(const AngleVector& v);

struct OracleConfig {
    int restarts = 64;
    int max_iterations = 500;      // per restart
    double step_tolerance = 1e-8;  // simplex diameter
    double value_tolerance = 1e-10;
    std::uint64_t rng_seed = 1;
};

void validate(const OracleConfig& cfg);  // throws InvalidConfig

struct OracleOutcome {
    double value = 0.0;
    MeasurementSettings settings{};  // certificate achieving value
    long iterations_used = 0;
    bool converged = false;
};

// Best Svetlichny expectation achievable with the six given directions (the
// remaining pair optimized exactly).
double angle_objective(const CorrelationTensor& t, const AngleVector& v);

// Multistart Nelder-Mead ascent of angle_objective. Deterministic for a fixed
// config: per-restart seeds derive from rng_seed and the restart index, and
// results merge by first-best restart order. The returned value is re-read
// from expectation(rho, settings), making it an achieved lower bound on
// S(rho). When the iteration budget runs out the best point so far is
// returned with converged = false rather than an error.
OracleOutcome maximize(const DensityOperator& rho, const OracleConfig& cfg);

struct DeltaCheck {
    double delta = 0.0;
    double delta_prime = 0.0;
    bool holds = false;  // delta + 4 delta' <= 32 + 1e-12
};

// The two polar-angle polynomials bounding the coherence/diagonal split of
// the objective; only the six polar angles (alpha1/3/5, beta1/3/5) enter.
DeltaCheck delta_inequality_check(const AngleVector& v);

// Dispatcher: analytic closed form when rho classifies as X-type, numeric
// oracle (with certificate, branch = numeric) otherwise.
SvetlichnyResult svetlichny_value(const DensityOperator& rho, const OracleConfig& cfg);

}  // namespace svet
