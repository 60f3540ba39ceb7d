#pragma once

#include "svet/density_operator.hpp"
#include "svet/mode_state.hpp"
#include "svet/svetlichny.hpp"

#include <numbers>
#include <optional>

namespace svet {

// One-horizon scenario: a two-branch state alpha |0000> + sqrt(1-alpha^2)
// |1111> over four field modes, n of which are squeezed against the horizon
// at temperature T (or T = 1/(8 pi M) for a black hole of mass M); p exterior
// and q interior squeezed modes are kept, p + q = n.
struct SchwarzschildScenario {
    double alpha = 1.0 / std::numbers::sqrt2;
    double omega = 1.0;
    std::optional<double> temperature;
    std::optional<double> mass;
    int n = 1;
    int p = 1;
    int q = 0;
};

// Throws InvalidScenario (ranges, p + q != n, missing or inconsistent T/M).
void validate(const SchwarzschildScenario& s);

// T for the scenario: the given temperature, or 1/(8 pi M).
double effective_temperature(const SchwarzschildScenario& s);

// T = 1/(8 pi M); throws NonPositiveMass.
double hawking_temperature(double mass);

// Two-mode squeezing coefficients at frequency omega and temperature T:
// cos_sq = 1/sqrt(e^(-omega/T) + 1), sin_sq = 1/sqrt(e^(omega/T) + 1);
// cos_sq^2 + sin_sq^2 = 1. Throws NonPositive.
struct SqueezeCoeffs {
    double cos_sq = 1.0;
    double sin_sq = 0.0;
};

SqueezeCoeffs squeeze_coeffs(double omega, double temperature);

// The (4+n)-mode pure state: each of the first n modes' vacua becomes
// cos_sq |0_out 0_in> + sin_sq |1_out 1_in> and its excitation |1_out 0_in>.
ModeState build_schwarzschild_state(const SchwarzschildScenario& s);

// Keeps [kruskal_{n+1}..kruskal_4, out_1..out_p, in_{p+1}..in_n] (each kept
// interior mode comes from a squeezing pair whose exterior partner is traced,
// preserving the single-coherence structure) and traces the rest.
DensityOperator reduce_schwarzschild(const SchwarzschildScenario& s);

// Closed form for the reduced state:
//   S = max(16 sqrt(2) alpha beta cos_sq^p sin_sq^q, 4 |N|),
//   N = alpha^2 tanh^n(omega / 2T) + (-1)^q (1 - alpha^2);
// identical to svetlichny_xtype(classify_xtype(reduce_schwarzschild(s))).
SvetlichnyResult svetlichny_schwarzschild(const SchwarzschildScenario& s);

// Two-horizon (black hole + cosmological) thermodynamics.
struct HorizonRadii {
    double r_H = 0.0;
    double r_C = 0.0;
};

// r_H = (2/sqrt(L)) cos[(pi + arccos(3 M sqrt(L))) / 3],
// r_C = (2/sqrt(L)) cos[(arccos(3 M sqrt(L)) - pi) / 3]; both roots of
// 1 - 2M/r - L r^2 / 3 = 0 with 0 < r_H < r_C. Throws NonPositiveMass,
// NonPositive, or NariaiViolation when 3 M sqrt(L) >= 1 - 1e-9.
HorizonRadii sds_horizons(double mass, double lambda_cosmo);

struct SdSThermo {
    double r_H = 0.0, r_C = 0.0;    // horizon radii
    double k_H = 0.0, k_C = 0.0;    // surface gravities
    double T_H = 0.0, T_C = 0.0;    // temperatures k / (2 pi), T_H > T_C
    double cos_r = 1.0, sin_r = 0.0;  // black-hole-horizon squeezing
    double cos_w = 1.0, sin_w = 0.0;  // cosmological-horizon squeezing
};

// k_H = L (2 r_H + r_C)(r_C - r_H) / (6 r_H), k_C = L (2 r_C + r_H)(r_C -
// r_H) / (6 r_C), temperatures k/(2 pi), squeezing coefficients per horizon.
SdSThermo sds_thermo(double mass, double lambda_cosmo, double omega);

// Two-horizon scenario: n modes squeezed against the black-hole horizon, m
// against the cosmological horizon, n + m = 4.
struct SdSScenario {
    double alpha = 1.0 / std::numbers::sqrt2;
    double omega = 1.0;
    double mass = 0.033;
    double lambda_cosmo = 1.0;
    int n = 2;
    int m = 2;
};

// Throws InvalidScenario (ranges, n + m != 4) or NariaiViolation at the
// degenerate-horizon limit.
void validate(const SdSScenario& s);

// Builds the 8-mode pure state (pairs (A_i, L_i) at the black-hole horizon,
// (B_j, R_j) at the cosmological one), traces out the L and R modes and
// returns the 16x16 state over [A_1..A_n, B_1..B_m].
DensityOperator build_sds_state(const SdSScenario& s);

// Closed form:
//   S = max(16 sqrt(2) alpha beta cos_r^n cos_w^m, 4 |N|),
//   N = alpha^2 tanh^n(omega / 2 T_H) tanh^m(omega / 2 T_C) + (1 - alpha^2);
// identical to svetlichny_xtype(classify_xtype(build_sds_state(s))).
SvetlichnyResult svetlichny_sds(const SdSScenario& s);

}  // namespace svet
